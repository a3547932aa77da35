// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// if a criterion outside the known-red list fails. Time budgets are part of
// each criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "depthkit/bigraph.hpp"
#include "depthkit/comb_depth.hpp"
#include "depthkit/depth.hpp"
#include "depthkit/frobenius.hpp"
#include "depthkit/partition.hpp"
#include "depthkit/tower.hpp"
#include "depthkit/tower_verify.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/tower_oracle.hpp"

using namespace depthkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  char const* title;
  double budget_ms;
  std::function<Outcome()> run;
};

NonNegMatrix paper_m() { return {{1, 1, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 0, 1, 1}}; }

std::string triple(DepthReport const& r) {
  return std::to_string(r.min_depth) + "/" + std::to_string(r.min_odd_depth) + "/" +
         std::to_string(r.min_even_depth);
}

Outcome paper_m_depths() {
  auto const r = min_depth(paper_m());
  return {r.min_depth == 5 && r.min_odd_depth == 5 && r.min_even_depth == 6,
          "min/odd/even = " + triple(r)};
}

// Each ideal has its own 1 ms budget; the criterion budget is their sum.
Outcome paper_ideals() {
  struct Case {
    std::vector<std::size_t> cols;
    std::size_t expect;
  };
  std::vector<Case> const cases{{{2}, 1}, {{0, 1, 2}, 3}, {{1, 2, 3}, 4}, {{0, 1, 2, 3}, 5}};
  Outcome out;
  auto const m = paper_m();
  for (auto const& c : cases) {
    auto const t0 = std::chrono::steady_clock::now();
    auto const d = ideal_depth(m, {c.cols}).min_depth;
    double const ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.ok = out.ok && d == c.expect && ms < 1.0;
    out.detail += (out.detail.empty() ? "" : ", ") + std::to_string(d);
  }
  out.detail = "depths " + out.detail + " (expected 1, 3, 4, 5)";
  return out;
}

Outcome corner_matrix() {
  auto const d = min_depth(NonNegMatrix{{1, 1, 0}, {0, 1, 1}}).min_depth;
  return {d == 3, "depth " + std::to_string(d)};
}

Outcome symmetric_chain() {
  Outcome out;
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const d = sym_depth(n).min_depth;
    out.ok = out.ok && d == 2 * n - 1;
    out.detail += (n > 1 ? " " : "") + std::to_string(d);
  }
  out.detail = "n=1..5: " + out.detail;
  return out;
}

Outcome cross_method() {
  std::mt19937_64 rng(5);
  std::size_t mismatches = 0;
  std::string first;
  for (int trial = 0; trial < 200; ++trial) {
    auto const m = oracle::random_inclusion(rng, 6, 8, true);
    auto const r = min_depth(m);
    auto const g = graph_depths(InclusionGraph::from_matrix(m));
    if (g.min() != r.min_depth || g.odd != r.min_odd_depth || g.even != r.min_even_depth) {
      if (!mismatches++) first = format_matrix(m);
    }
  }
  return {mismatches == 0, "200 connected matrices, " + std::to_string(mismatches) + " mismatches" +
                               (first.empty() ? "" : "; first:\n" + first)};
}

Outcome ideal_bound() {
  std::mt19937_64 rng(6);
  std::size_t checked = 0, violations = 0;
  std::string first;
  for (int trial = 0; trial < 100; ++trial) {
    auto const m = oracle::random_inclusion(rng, 6, 8, false);
    std::size_t const d = min_depth(m).min_depth;
    std::size_t const c = m.cols();
    auto check = [&](std::vector<std::size_t> cols) {
      ++checked;
      std::size_t const di = ideal_depth(m, {cols}).min_depth;
      if (di > d && !violations++) {
        std::ostringstream os;
        os << "d^I=" << di << " > d=" << d << " for columns";
        for (auto j : cols) os << ' ' << j + 1;
        os << " of\n" << format_matrix(m);
        first = os.str();
      }
    };
    for (std::size_t a = 0; a < c; ++a) {
      check({a});
      for (std::size_t b = a + 1; b < c; ++b) {
        check({a, b});
        for (std::size_t e = b + 1; e < c; ++e) check({a, b, e});
      }
    }
  }
  return {violations == 0, std::to_string(checked) + " ideals, " + std::to_string(violations) +
                               " violations" + (first.empty() ? "" : "; first: " + first)};
}

Outcome tower_suite() {
  auto const pair = fixture::s2_s3();
  Tower const tower(fixture::standard(pair));
  auto const report = verify_relations(tower, {4, 0, 10000});
  char const* required[] = {"frobenius_system",  "frobenius_equations", "tl1_far_commutation",
                            "tl1_braid",         "tl2",                 "tl3",
                            "tl3_normalization", "tl4",                 "unit_laws",
                            "associativity",     "include_homomorphism", "dual_basis_sum",
                            "tensor_factorization"};
  Outcome out;
  for (auto const* name : required) {
    if (!report.find(name)) {
      out.ok = false;
      out.detail += std::string(" missing ") + name;
    }
  }
  std::size_t cases = 0;
  for (auto const& c : report.checks) {
    cases += c.cases;
    if (!c.passed) {
      out.ok = false;
      out.detail += " " + c.name + " failed: " + c.counterexample.value_or("");
    }
  }
  out.detail = std::to_string(report.checks.size()) + " identities, " + std::to_string(cases) +
               " cases up to level 4" + out.detail;
  return out;
}

Outcome endomorphism_oracle() {
  auto const pair = fixture::s2_s3();
  Tower const tower(fixture::standard(pair));
  oracle::EndomorphismOracle const o(*pair.g, pair.h);
  std::vector<TowerElement> basis;
  for (auto const& w : tower.basis(2)) basis.push_back(tower.normalize_word(w));
  std::size_t pairs = 0, bad = 0;
  for (auto const& a : basis) {
    auto const ma = o.matrix(a);
    for (auto const& b : basis) {
      ++pairs;
      if (!(o.matrix(tower.multiply(a, b)) == o.compose(ma, o.matrix(b)))) ++bad;
    }
  }
  return {bad == 0, std::to_string(pairs) + " basis pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome combinatorial() {
  auto const a3 = fixture::make_pair(3, {"(1 2 3)"}, {"(1 2)", "(1 2 3)"});
  auto const s2 = fixture::s2_s3();
  auto const normal = combinatorial_depth(*a3.g, a3.h);
  auto const r = combinatorial_depth(*s2.g, s2.h);
  std::size_t const matrix = sym_depth(2).min_depth;
  std::size_t const bound = normalizer_bound(*s2.g, s2.h);
  bool const ok = normal.depth && *normal.depth <= 2 && normal.normal && r.depth &&
                  *r.depth >= matrix && *r.depth <= bound;
  auto show = [](CombDepthResult const& c) {
    return c.depth ? std::to_string(*c.depth) : ">" + std::to_string(c.lower_bound - 1);
  };
  return {ok, "A3<S3: d_c=" + show(normal) + (normal.normal ? " normal" : " not normal") +
                  "; S2<S3: " + std::to_string(matrix) + " <= d_c=" + show(r) +
                  " <= " + std::to_string(bound)};
}

Outcome change_of_coordinates() {
  auto const pair = fixture::s2_s3();
  Tower const e(fixture::standard(pair));
  auto const& sys = e.system();
  GroupAlgebraElement derived = sys.one();
  for (std::size_t h : sys.subgroup_elements()) derived += sys.element(h);
  std::vector<std::pair<std::string, GroupAlgebraElement>> const ds{
      {"scalar 3", GroupAlgebraElement::scalar(pair.g, 3)}, {"1 + sum H", derived}};
  Outcome out;
  std::size_t checks = 0;
  for (auto const& [name, value] : ds) {
    CentralizerElement const d(value, sys);
    Tower const f(sys.twisted(d));
    bool ok = !f.system().check_equations();
    for (std::size_t level = 2; level <= 3; ++level) {
      ok = ok && e.change_coordinates(e.unit(level), d) == f.unit(level);
      auto const words = e.basis(level);
      for (auto const& a : words) {
        auto const ea = e.normalize_word(a);
        auto const fa = e.change_coordinates(ea, d);
        if (level == 2) {
          ++checks;
          ok = ok && e.change_coordinates(e.include(ea), d) == f.include(fa);
        }
        for (auto const& b : words) {
          ++checks;
          auto const eb = e.normalize_word(b);
          ok = ok && e.change_coordinates(e.multiply(ea, eb), d) ==
                         f.multiply(fa, e.change_coordinates(eb, d));
        }
      }
    }
    if (!ok) out.detail += " failed for d = " + name + ";";
    out.ok = out.ok && ok;
  }
  out.detail = std::to_string(checks) + " checks at levels 2-3 for two d" + out.detail;
  return out;
}

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "S3 in S4 depths 5/5/6", 1.0, paper_m_depths},
      {2, "ideal depths on M", 4.0, paper_ideals},
      {3, "corner matrix depth 3", 1000.0, corner_matrix},
      {4, "sym_depth(n) = 2n-1, n = 1..5", 1000.0, symmetric_chain},
      {5, "matrix and graph depths agree", 5000.0, cross_method},
      {6, "ideal depth bound d^I <= d", 10000.0, ideal_bound},
      {7, "tower identity suite, S2 in S3, level 4", 60000.0, tower_suite},
      {8, "level-2 endomorphism oracle", 1000.0, endomorphism_oracle},
      {9, "combinatorial depth", 10000.0, combinatorial},
      {10, "change of coordinates", 10000.0, change_of_coordinates},
  };
  // Criteria that fail for a documented mathematical reason. They are still
  // evaluated and printed as FAIL; only the exit status tolerates them.
  std::vector<int> const known_red{6};
  int failed = 0;
  int unexpected = 0;
  for (auto const& c : criteria) {
    auto const t0 = std::chrono::steady_clock::now();
    Outcome const o = c.run();
    double const ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    bool const pass = o.ok && ms < c.budget_ms;
    bool const red = std::find(known_red.begin(), known_red.end(), c.id) != known_red.end();
    if (!pass) ++failed;
    if (!pass && !red) ++unexpected;
    std::printf("criterion %2d: %s  %s  [%s; %.3f ms, budget %.0f ms]\n", c.id,
                pass ? "PASS" : "FAIL", c.title, o.detail.c_str(), ms, c.budget_ms);
  }
  std::printf("%d of %zu criteria passed", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  if (failed > unexpected) {
    std::printf("; known red:");
    for (int id : known_red) std::printf(" %d", id);
  }
  std::printf("\n");
  return unexpected == 0 ? 0 : 1;
}
