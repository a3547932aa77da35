// Level-2 oracle: R (x)_S R is End(R_S), and End(R_S) is m x m matrices over
// Q[H] once a transversal of H in G is fixed. The transversal here is the
// largest element of each coset, so it differs from the library's choice.
#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "depthkit/group_algebra.hpp"
#include "depthkit/perm_group.hpp"
#include "depthkit/tower.hpp"

namespace oracle {

using depthkit::Rational;
using Vec = std::map<std::size_t, Rational>;  // element of Q[G]
using EndMatrix = std::vector<std::vector<Vec>>;

class EndomorphismOracle {
 public:
  EndomorphismOracle(depthkit::PermGroup const& g, depthkit::PermGroup const& h) : g_(g) {
    for (auto const& p : h.elements()) h_.insert(*g.index_of(p));
    std::set<std::size_t> seen;
    for (std::size_t x = g.order(); x-- > 0;) {
      if (seen.count(x)) continue;
      reps_.push_back(x);
      for (std::size_t s : h_) seen.insert(g.product(x, s));
    }
  }

  std::size_t index() const { return reps_.size(); }

  Vec e(Vec const& v) const {
    Vec out;
    for (auto const& [x, c] : v)
      if (h_.count(x)) out[x] += c;
    return out;
  }

  Vec mul(Vec const& a, Vec const& b) const {
    Vec out;
    for (auto const& [x, c] : a)
      for (auto const& [y, d] : b) {
        auto& slot = out[g_.product(x, y)];
        slot += c * d;
        if (slot == 0) out.erase(g_.product(x, y));
      }
    return out;
  }

  // v |-> sum c * w0 E(w1 v) for a level-2 element.
  Vec apply(depthkit::TowerElement const& a, Vec const& v) const {
    Vec out;
    for (auto const& [w, c] : a.terms()) {
      Vec t = mul(Vec{{w[0], c}}, e(mul(Vec{{w[1], 1}}, v)));
      for (auto const& [x, d] : t) {
        out[x] += d;
        if (out[x] == 0) out.erase(x);
      }
    }
    return out;
  }

  // f(t_j) = sum_i t_i M_ij with M_ij in Q[H].
  EndMatrix matrix(depthkit::TowerElement const& a) const {
    std::size_t const m = reps_.size();
    EndMatrix out(m, std::vector<Vec>(m));
    for (std::size_t j = 0; j < m; ++j) {
      Vec const image = apply(a, Vec{{reps_[j], 1}});
      for (auto const& [x, c] : image) {
        for (std::size_t i = 0; i < m; ++i) {
          std::size_t const h = g_.product(g_.inverse(reps_[i]), x);
          if (h_.count(h)) {
            out[i][j][h] += c;
            break;
          }
        }
      }
      for (std::size_t i = 0; i < m; ++i) std::erase_if(out[i][j], [](auto const& kv) { return kv.second == 0; });
    }
    return out;
  }

  EndMatrix compose(EndMatrix const& a, EndMatrix const& b) const {
    std::size_t const m = a.size();
    EndMatrix out(m, std::vector<Vec>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Vec acc;
        for (std::size_t k = 0; k < m; ++k) {
          for (auto const& [x, c] : mul(a[i][k], b[k][j])) acc[x] += c;
        }
        std::erase_if(acc, [](auto const& kv) { return kv.second == 0; });
        out[i][j] = std::move(acc);
      }
    return out;
  }

 private:
  depthkit::PermGroup const& g_;
  std::set<std::size_t> h_;
  std::vector<std::size_t> reps_;
};

// Normal form by the prefix-product rule: slot k holds the representative of
// (slot_1 ... slot_{k-1})^-1 (a_1 ... a_k) H, and the last slot absorbs the rest.
inline depthkit::Word prefix_normal_form(depthkit::PermGroup const& g,
                                         std::set<std::size_t> const& h,
                                         depthkit::Word const& a) {
  auto rep_of = [&](std::size_t x) {
    for (std::size_t r = 0; r < g.order(); ++r) {
      if (h.count(g.product(g.inverse(r), x))) return r;  // least element of xH
    }
    return x;
  };
  depthkit::Word out;
  std::size_t prefix = depthkit::PermGroup::identity();  // a_1 ... a_k
  std::size_t reps = depthkit::PermGroup::identity();    // slot_1 ... slot_{k-1}
  for (std::size_t k = 0; k < a.size(); ++k) {
    prefix = g.product(prefix, a[k]);
    std::size_t const rest = g.product(g.inverse(reps), prefix);
    std::size_t const slot = k + 1 == a.size() ? rest : rep_of(rest);
    out.push_back(slot);
    reps = g.product(reps, slot);
  }
  return out;
}

}  // namespace oracle
