#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "depthkit/tower.hpp"

namespace depthkit {

struct VerifyOptions {
  std::size_t max_level = 3;
  std::uint64_t seed = 0;
  // Case spaces larger than this are sampled (seeded) down to this size.
  std::size_t sample_limit = 10000;
};

struct IdentityCheck {
  std::string name;
  std::vector<std::size_t> levels_checked;
  bool passed = true;
  std::size_t cases = 0;
  bool sampled = false;
  std::optional<std::string> counterexample;
};

struct TowerReport {
  std::size_t max_level = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
  IdentityCheck const* find(std::string const& name) const;
};

// Checks the ring, Frobenius and Temperley-Lieb identities of the tower at
// every applicable level <= max_level with exact arithmetic. Failures are
// report entries; throws ValidationError only for max_level < 2.
TowerReport verify_relations(Tower const& tower, VerifyOptions const& options = {});

std::string to_json(TowerReport const& report, bool pretty = false);

}  // namespace depthkit
