#pragma once

#include <memory>
#include <string>
#include <vector>

#include "depthkit/frobenius.hpp"
#include "depthkit/perm_group.hpp"
#include "depthkit/tower.hpp"

namespace fixture {

struct Pair {
  std::shared_ptr<depthkit::PermGroup const> g;
  depthkit::PermGroup h;
};

inline Pair make_pair(std::size_t degree, std::vector<std::string> const& h_gens,
                      std::vector<std::string> const& g_gens) {
  auto perms = [&](std::vector<std::string> const& gens) {
    std::vector<depthkit::Permutation> out;
    for (auto const& s : gens) out.push_back(depthkit::Permutation::parse_cycles(s, degree));
    return out;
  };
  return {std::make_shared<depthkit::PermGroup const>(
              depthkit::PermGroup::generate(degree, perms(g_gens))),
          depthkit::PermGroup::generate(degree, perms(h_gens))};
}

// S_2 = <(1 2)> in S_3.
inline Pair s2_s3() { return make_pair(3, {"(1 2)"}, {"(1 2)", "(1 2 3)"}); }

inline depthkit::FrobeniusSystem standard(Pair const& p) {
  return depthkit::FrobeniusSystem::standard(p.g, p.h);
}

}  // namespace fixture
