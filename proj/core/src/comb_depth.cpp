#include "depthkit/comb_depth.hpp"

#include <deque>
#include <set>
#include <vector>

#include "depthkit/errors.hpp"

namespace depthkit {

namespace {

class ConjugateSearch {
 public:
  ConjugateSearch(PermGroup const& g, ElementSet h) : g_(g), h_(std::move(h)) {
    conj_.reserve(g.order());
    std::set<ElementSet> distinct;
    for (std::size_t x = 0; x < g.order(); ++x) {
      conj_.push_back(g.conjugate_set(x, h_));
      distinct.insert(conj_.back());
    }
    distinct_conj_.assign(distinct.begin(), distinct.end());
    levels_.push_back({h_});
  }

  // Intersections of H with at most k conjugates of H.
  std::set<ElementSet> const& intersections(std::size_t k) {
    while (levels_.size() <= k) {
      std::set<ElementSet> next = levels_.back();
      for (auto const& a : levels_.back()) {
        for (auto const& c : distinct_conj_) next.insert(a & c);
      }
      levels_.push_back(std::move(next));
    }
    return levels_[k];
  }

  bool even_condition(std::size_t n) { return intersections(n) == intersections(n - 1); }

  bool odd_condition(std::size_t n) {
    auto const& xs_rest = intersections(n - 1);
    auto const& ys_rest = intersections(n - 2);
    for (std::size_t x1 = 0; x1 < g_.order(); ++x1) {
      for (auto const& a : xs_rest) {
        ElementSet const k = a & conj_[x1];
        if (!has_matching_y(x1, k, ys_rest)) return false;
      }
    }
    return true;
  }

 private:
  bool has_matching_y(std::size_t x1, ElementSet const& k,
                      std::set<ElementSet> const& ys_rest) const {
    ElementSet const cent = g_.centralizer(k);
    for (std::size_t c = cent.find_first(); c != ElementSet::npos; c = cent.find_next(c)) {
      std::size_t const y1 = g_.product(x1, c);
      for (auto const& b : ys_rest) {
        if ((b & conj_[y1]) == k) return true;
      }
    }
    return false;
  }

  PermGroup const& g_;
  ElementSet h_;
  std::vector<ElementSet> conj_;
  std::vector<ElementSet> distinct_conj_;
  std::deque<std::set<ElementSet>> levels_;  // stable references across growth
};

}  // namespace

std::size_t normalizer_bound(PermGroup const& g, PermGroup const& h) {
  return 2 * (g.order() / normalizer(g, h).order());
}

CombDepthResult combinatorial_depth(PermGroup const& g, PermGroup const& h,
                                    CombDepthOptions const& options) {
  if (options.cap < 2) throw ValidationError("combinatorial depth cap must be >= 2");
  if (g.order() > options.max_group_order) {
    throw ResourceError("|G| = " + std::to_string(g.order()) +
                        " exceeds the group-size guard of " +
                        std::to_string(options.max_group_order));
  }
  ElementSet hs = g.embed(h);

  CombDepthResult result;
  result.normal = is_normal(g, h);
  if (h.order() == g.order()) {
    result.improper_pair = true;
    result.depth = 1;
    result.lower_bound = 1;
    return result;
  }

  ConjugateSearch search(g, std::move(hs));
  for (std::size_t d = 2; d <= options.cap; ++d) {
    bool holds = (d % 2 == 0) ? search.even_condition(d / 2)
                              : search.odd_condition((d + 1) / 2);
    if (holds) {
      result.depth = d;
      result.lower_bound = d;
      return result;
    }
  }
  result.lower_bound = options.cap + 1;
  return result;
}

}  // namespace depthkit
