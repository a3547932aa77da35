#include "depthkit/tower_verify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>

#include "depthkit/errors.hpp"

namespace depthkit {

bool TowerReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](IdentityCheck const& c) { return c.passed; });
}

IdentityCheck const* TowerReport::find(std::string const& name) const {
  for (auto const& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

using Failure = std::optional<std::string>;
using Tuple = std::vector<std::size_t>;

std::uint64_t fnv1a(std::string const& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

class Verifier {
 public:
  Verifier(Tower const& tower, VerifyOptions const& options)
      : tower_(tower), sys_(tower.system()), options_(options) {
    std::size_t const max = options.max_level;
    basis_.resize(max + 1);
    units_.resize(max + 1, TowerElement(1));
    for (std::size_t level = 1; level <= max; ++level) {
      for (auto const& w : tower.basis(level)) basis_[level].push_back(tower.normalize_word(w));
      units_[level] = tower.unit(level);
    }
    // e_n lives in R_{n+1}.
    for (std::size_t n = 1; n < max; ++n) tl_.push_back(tower.tl_generator(n));
  }

  TowerReport run() {
    TowerReport report;
    report.max_level = options_.max_level;
    report.seed = options_.seed;
    auto add = [&](std::string name, auto&& body) {
      IdentityCheck check;
      check.name = std::move(name);
      body(check);
      report.checks.push_back(std::move(check));
    };
    add("frobenius_system", [&](IdentityCheck& c) { frobenius_system(c); });
    add("generator_criterion", [&](IdentityCheck& c) { generator(c); });
    add("unit_laws", [&](IdentityCheck& c) { unit_laws(c); });
    add("associativity", [&](IdentityCheck& c) { associativity(c); });
    add("include_homomorphism", [&](IdentityCheck& c) { include_hom(c); });
    add("bimodule_action", [&](IdentityCheck& c) { bimodule(c); });
    add("cond_exp_bimodule_map", [&](IdentityCheck& c) { cond_exp_bimodule(c); });
    add("frobenius_equations", [&](IdentityCheck& c) { tower_feq(c); });
    add("dual_basis_sum", [&](IdentityCheck& c) { dual_basis_sum(c); });
    add("dual_basis_tl_form", [&](IdentityCheck& c) { dual_basis_tl_form(c); });
    add("tl_shift", [&](IdentityCheck& c) { tl_shift(c); });
    add("tl1_far_commutation", [&](IdentityCheck& c) { tl1_far(c); });
    add("tl1_braid", [&](IdentityCheck& c) { tl1_braid(c); });
    add("tl2", [&](IdentityCheck& c) { tl2(c); });
    add("tl3", [&](IdentityCheck& c) { tl3(c); });
    add("tl3_normalization", [&](IdentityCheck& c) { tl3_norm(c); });
    add("tl4", [&](IdentityCheck& c) { tl4(c); });
    add("tensor_factorization", [&](IdentityCheck& c) { tensor_factorization(c); });
    return report;
  }

 private:
  std::size_t max() const { return options_.max_level; }
  TowerElement const& e(std::size_t n) const { return tl_[n - 1]; }
  std::string str(TowerElement const& a) const { return tower_.to_string(a); }

  // E_n : R_{n+1} -> R_n, with E_0 the base expectation on R_1 = R.
  TowerElement down(TowerElement const& a) const {
    if (a.level() > 1) return tower_.cond_exp(a);
    TowerElement out(1);
    for (auto const& [w, c] : a.terms()) {
      out += tower_.from_ring(sys_.expectation(w[0])) * c;
    }
    return out;
  }

  // x^n_i and y^n_i in R_{n+1}; x^0_i = x_i.
  std::vector<TowerElement> dual_x(std::size_t n) const {
    if (n > 0) return tower_.dual_x(n);
    std::vector<TowerElement> out;
    for (auto const& x : sys_.x()) out.push_back(tower_.from_ring(x));
    return out;
  }
  std::vector<TowerElement> dual_y(std::size_t n) const {
    if (n > 0) return tower_.dual_y(n);
    std::vector<TowerElement> out;
    for (auto const& y : sys_.y()) out.push_back(tower_.from_ring(y));
    return out;
  }

  TowerElement mul(TowerElement const& a, TowerElement const& b) const {
    return tower_.product(a, b);
  }

  // Runs fn over every tuple in dims, or over sample_limit seeded tuples when
  // the space is larger. Stops at the first failure.
  void cases(IdentityCheck& check, std::size_t level, Tuple const& dims,
             std::function<Failure(Tuple const&)> const& fn) {
    if (std::find(check.levels_checked.begin(), check.levels_checked.end(), level) ==
        check.levels_checked.end()) {
      check.levels_checked.push_back(level);
    }
    if (!check.passed) return;
    std::size_t total = 1;
    for (std::size_t d : dims) {
      if (d == 0) return;
      total = total > std::numeric_limits<std::size_t>::max() / d
                  ? std::numeric_limits<std::size_t>::max()
                  : total * d;
    }
    auto fail = [&](Failure const& f) {
      check.passed = false;
      check.counterexample = "level " + std::to_string(level) + ": " + *f;
    };
    Tuple t(dims.size(), 0);
    if (total <= options_.sample_limit) {
      for (;;) {
        ++check.cases;
        if (auto f = fn(t)) return fail(f);
        std::size_t k = dims.size();
        for (;;) {
          if (k == 0) return;
          --k;
          if (++t[k] < dims[k]) break;
          t[k] = 0;
        }
      }
    }
    check.sampled = true;
    std::uint64_t const key = fnv1a(check.name);
    std::seed_seq seq{static_cast<std::uint32_t>(options_.seed),
                      static_cast<std::uint32_t>(options_.seed >> 32),
                      static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32),
                      static_cast<std::uint32_t>(level)};
    std::mt19937_64 rng(seq);
    for (std::size_t s = 0; s < options_.sample_limit; ++s) {
      for (std::size_t k = 0; k < dims.size(); ++k) {
        t[k] = std::uniform_int_distribution<std::size_t>(0, dims[k] - 1)(rng);
      }
      ++check.cases;
      if (auto f = fn(t)) return fail(f);
    }
  }

  void once(IdentityCheck& check, std::size_t level, std::function<Failure()> const& fn) {
    cases(check, level, {1}, [&](Tuple const&) { return fn(); });
  }

  void frobenius_system(IdentityCheck& c) {
    once(c, 1, [&]() { return sys_.check_equations(); });
  }

  void generator(IdentityCheck& c) {
    once(c, 1, [&]() -> Failure {
      if (generator_criterion(sys_).holds) return std::nullopt;
      return "no pairs with sum E(a_j c_j) = 1";
    });
  }

  void unit_laws(IdentityCheck& c) {
    for (std::size_t l = 1; l <= max(); ++l) {
      auto const& b = basis_[l];
      cases(c, l, {b.size()}, [&](Tuple const& t) -> Failure {
        auto const& a = b[t[0]];
        if (!(tower_.multiply(units_[l], a) == a)) return "1 a != a for a = " + str(a);
        if (!(tower_.multiply(a, units_[l]) == a)) return "a 1 != a for a = " + str(a);
        return std::nullopt;
      });
    }
  }

  void associativity(IdentityCheck& c) {
    for (std::size_t l = 1; l <= max(); ++l) {
      auto const& b = basis_[l];
      cases(c, l, {b.size(), b.size(), b.size()}, [&](Tuple const& t) -> Failure {
        auto const& x = b[t[0]];
        auto const& y = b[t[1]];
        auto const& z = b[t[2]];
        if (tower_.multiply(tower_.multiply(x, y), z) == tower_.multiply(x, tower_.multiply(y, z))) {
          return std::nullopt;
        }
        return "(ab)c != a(bc) for a = " + str(x) + ", b = " + str(y) + ", c = " + str(z);
      });
    }
  }

  void include_hom(IdentityCheck& c) {
    for (std::size_t l = 1; l < max(); ++l) {
      once(c, l + 1, [&]() -> Failure {
        if (tower_.include(units_[l]) == units_[l + 1]) return std::nullopt;
        return "include(1) != 1";
      });
      auto const& b = basis_[l];
      cases(c, l + 1, {b.size(), b.size()}, [&](Tuple const& t) -> Failure {
        auto const& x = b[t[0]];
        auto const& y = b[t[1]];
        if (tower_.include(tower_.multiply(x, y)) ==
            tower_.multiply(tower_.include(x), tower_.include(y))) {
          return std::nullopt;
        }
        return "include(ab) != include(a) include(b) for a = " + str(x) + ", b = " + str(y);
      });
    }
  }

  void bimodule(IdentityCheck& c) {
    for (std::size_t n = 2; n <= max(); ++n) {
      for (std::size_t m = 1; m < n; ++m) {
        auto const& xs = basis_[m];
        auto const& as = basis_[n];
        cases(c, n, {xs.size(), as.size()}, [&](Tuple const& t) -> Failure {
          auto const& x = xs[t[0]];
          auto const& a = as[t[1]];
          if (!(tower_.bimodule_action(x, a, Side::Left) == mul(x, a))) {
            return "left action of " + str(x) + " on " + str(a) + " differs from the product";
          }
          if (!(tower_.bimodule_action(x, a, Side::Right) == mul(a, x))) {
            return "right action of " + str(x) + " on " + str(a) + " differs from the product";
          }
          return std::nullopt;
        });
      }
    }
  }

  void cond_exp_bimodule(IdentityCheck& c) {
    for (std::size_t n = 1; n < max(); ++n) {
      auto const& lo = basis_[n];
      auto const& hi = basis_[n + 1];
      cases(c, n + 1, {lo.size(), hi.size(), lo.size()}, [&](Tuple const& t) -> Failure {
        auto const& x = lo[t[0]];
        auto const& z = hi[t[1]];
        auto const& y = lo[t[2]];
        if (tower_.cond_exp(mul(mul(x, z), y)) == tower_.multiply(tower_.multiply(x, tower_.cond_exp(z)), y)) {
          return std::nullopt;
        }
        return "E(x z y) != x E(z) y for x = " + str(x) + ", z = " + str(z) + ", y = " + str(y);
      });
    }
  }

  // sum_i x^n_i E_n(y^n_i z) = z = sum_i E_n(z x^n_i) y^n_i, z in R_{n+1}.
  void tower_feq(IdentityCheck& c) {
    for (std::size_t n = 0; n < max(); ++n) {
      auto const xs = dual_x(n);
      auto const ys = dual_y(n);
      auto const& b = basis_[n + 1];
      cases(c, n + 1, {b.size()}, [&](Tuple const& t) -> Failure {
        auto const& z = b[t[0]];
        TowerElement left(n + 1);
        TowerElement right(n + 1);
        for (std::size_t i = 0; i < xs.size(); ++i) {
          left += mul(xs[i], down(mul(ys[i], z)));
          right += mul(down(mul(z, xs[i])), ys[i]);
        }
        if (!(left == z)) return "sum x_i E(y_i z) != z for z = " + str(z);
        if (!(right == z)) return "sum E(z x_i) y_i != z for z = " + str(z);
        return std::nullopt;
      });
    }
  }

  // sum_i x^n_i e_{n+1} y^n_i = 1_{n+2}.
  void dual_basis_sum(IdentityCheck& c) {
    for (std::size_t n = 0; n + 2 <= max(); ++n) {
      once(c, n + 2, [&]() -> Failure {
        auto const xs = dual_x(n);
        auto const ys = dual_y(n);
        TowerElement sum(n + 2);
        for (std::size_t i = 0; i < xs.size(); ++i) sum += mul(mul(xs[i], e(n + 1)), ys[i]);
        if (sum == units_[n + 2]) return std::nullopt;
        return "sum x_i e y_i = " + str(sum);
      });
    }
  }

  // x^n_i = x_i e_1 ... e_n and y^n_i = e_n ... e_1 y_i.
  void dual_basis_tl_form(IdentityCheck& c) {
    for (std::size_t n = 1; n < max(); ++n) {
      auto const xs = dual_x(n);
      auto const ys = dual_y(n);
      cases(c, n + 1, {xs.size()}, [&](Tuple const& t) -> Failure {
        std::size_t const i = t[0];
        TowerElement x = tower_.from_ring(sys_.x()[i]);
        TowerElement y = tower_.from_ring(sys_.y()[i]);
        for (std::size_t k = 1; k <= n; ++k) {
          x = mul(x, e(k));
          y = mul(e(k), y);
        }
        if (!(x == xs[i])) return "x_i e_1..e_n != x^n_i for i = " + std::to_string(i + 1);
        if (!(y == ys[i])) return "e_n..e_1 y_i != y^n_i for i = " + std::to_string(i + 1);
        return std::nullopt;
      });
    }
  }

  // e_n ... e_1 r = 1_{R_n} (x) r for r in R.
  void tl_shift(IdentityCheck& c) {
    auto const& b = basis_[1];
    for (std::size_t n = 1; n < max(); ++n) {
      cases(c, n + 1, {b.size()}, [&](Tuple const& t) -> Failure {
        auto const& r = b[t[0]];
        TowerElement v = r;
        for (std::size_t k = 1; k <= n; ++k) v = mul(e(k), v);
        if (v == tower_.tensor(units_[n], r)) return std::nullopt;
        return "e_n..e_1 r != 1 (x) r for r = " + str(r);
      });
    }
  }

  void tl1_far(IdentityCheck& c) {
    for (std::size_t j = 3; j < max(); ++j) {
      for (std::size_t i = 1; i + 2 <= j; ++i) {
        once(c, j + 1, [&]() -> Failure {
          if (mul(e(i), e(j)) == mul(e(j), e(i))) return std::nullopt;
          return "e_" + std::to_string(i) + " and e_" + std::to_string(j) + " do not commute";
        });
      }
    }
  }

  void tl1_braid(IdentityCheck& c) {
    for (std::size_t i = 1; i + 2 <= max(); ++i) {
      once(c, i + 2, [&]() -> Failure {
        auto const& a = e(i);
        auto const& b = e(i + 1);
        if (!(mul(mul(b, a), b) == b)) return "e_{i+1} e_i e_{i+1} != e_{i+1}, i = " + std::to_string(i);
        if (!(mul(mul(a, b), a) == tower_.include(a))) {
          return "e_i e_{i+1} e_i != e_i, i = " + std::to_string(i);
        }
        return std::nullopt;
      });
    }
  }

  // e_n x e_n = e_n E_{n-1}(x) = E_{n-1}(x) e_n, x in R_n.
  void tl2(IdentityCheck& c) {
    for (std::size_t n = 1; n < max(); ++n) {
      auto const& b = basis_[n];
      cases(c, n + 1, {b.size()}, [&](Tuple const& t) -> Failure {
        auto const& x = b[t[0]];
        TowerElement const lhs = mul(mul(e(n), x), e(n));
        TowerElement const ex = down(x);
        if (!(lhs == mul(e(n), ex))) return "e x e != e E(x) for x = " + str(x);
        if (!(lhs == mul(ex, e(n)))) return "e x e != E(x) e for x = " + str(x);
        return std::nullopt;
      });
    }
  }

  // y e_n = E_n(y e_n) e_n and e_n y = e_n E_n(e_n y), y in R_{n+1}.
  void tl3(IdentityCheck& c) {
    for (std::size_t n = 1; n < max(); ++n) {
      auto const& b = basis_[n + 1];
      cases(c, n + 1, {b.size()}, [&](Tuple const& t) -> Failure {
        auto const& y = b[t[0]];
        TowerElement const ye = tower_.multiply(y, e(n));
        if (!(ye == mul(tower_.cond_exp(ye), e(n)))) return "y e != E(y e) e for y = " + str(y);
        TowerElement const ey = tower_.multiply(e(n), y);
        if (!(ey == mul(e(n), tower_.cond_exp(ey)))) return "e y != e E(e y) for y = " + str(y);
        return std::nullopt;
      });
    }
  }

  void tl3_norm(IdentityCheck& c) {
    for (std::size_t n = 1; n < max(); ++n) {
      once(c, n + 1, [&]() -> Failure {
        if (tower_.cond_exp(e(n)) == units_[n]) return std::nullopt;
        return "E_n(e_n) = " + str(tower_.cond_exp(e(n))) + " for n = " + std::to_string(n);
      });
    }
  }

  // x e_n = e_n x for x in R_{n-1}; R_0 is the subgroup algebra.
  void tl4(IdentityCheck& c) {
    for (std::size_t n = 1; n < max(); ++n) {
      std::vector<TowerElement> xs;
      if (n == 1) {
        for (std::size_t h : sys_.subgroup_elements()) {
          xs.push_back(tower_.from_ring(sys_.element(h)));
        }
      }
      auto const& b = n == 1 ? xs : basis_[n - 1];
      cases(c, n + 1, {b.size()}, [&](Tuple const& t) -> Failure {
        auto const& x = b[t[0]];
        if (mul(x, e(n)) == mul(e(n), x)) return std::nullopt;
        return "x e_n != e_n x for x = " + str(x) + ", n = " + std::to_string(n);
      });
    }
  }

  // a_1 (x) ... (x) a_n = a_1 (e_1 a_2) (e_2 e_1 a_3) ... (e_{n-1} ... e_1 a_n).
  void tensor_factorization(IdentityCheck& c) {
    for (std::size_t l = 2; l <= max(); ++l) {
      auto const words = tower_.basis(l);
      cases(c, l, {words.size()}, [&](Tuple const& t) -> Failure {
        Word const& w = words[t[0]];
        TowerElement acc = tower_.from_ring(sys_.element(w[0]));
        for (std::size_t k = 1; k < l; ++k) {
          TowerElement f = tower_.from_ring(sys_.element(w[k]));
          for (std::size_t j = 1; j <= k; ++j) f = mul(e(j), f);
          acc = mul(acc, f);
        }
        if (acc == basis_[l][t[0]]) return std::nullopt;
        return "word " + str(basis_[l][t[0]]) + " factors to " + str(acc);
      });
    }
  }

  Tower const& tower_;
  FrobeniusSystem const& sys_;
  VerifyOptions options_;
  std::vector<std::vector<TowerElement>> basis_;
  std::vector<TowerElement> units_;
  std::vector<TowerElement> tl_;
};

}  // namespace

TowerReport verify_relations(Tower const& tower, VerifyOptions const& options) {
  if (options.max_level < 2) throw ValidationError("tower verification needs level >= 2");
  if (options.sample_limit == 0) throw ValidationError("sample limit must be positive");
  return Verifier(tower, options).run();
}

}  // namespace depthkit
