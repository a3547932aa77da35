#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "depthkit/frobenius.hpp"
#include "depthkit/group_algebra.hpp"

namespace depthkit {

// Basis tensor g_{i_1} (x) ... (x) g_{i_{n-1}} (x) g of C_n(R, S): every slot
// holds a group-element index, all slots but the last hold coset
// representatives.
using Word = std::vector<std::size_t>;

// Element of the tower ring R_n = C_n(R, S) = R (x)_S ... (x)_S R (n factors)
// in normal form. Zero coefficients are never stored.
class TowerElement {
 public:
  using Terms = std::map<Word, Rational>;

  explicit TowerElement(std::size_t level);

  std::size_t level() const noexcept { return level_; }
  Terms const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Adds c * word; the word must already be in normal form.
  void add_normal(Word const& word, Rational const& c);

  TowerElement& operator+=(TowerElement const& rhs);
  TowerElement& operator-=(TowerElement const& rhs);
  TowerElement& operator*=(Rational const& c);
  friend TowerElement operator+(TowerElement a, TowerElement const& b) { return a += b; }
  friend TowerElement operator-(TowerElement a, TowerElement const& b) { return a -= b; }
  friend TowerElement operator*(TowerElement a, Rational const& c) { return a *= c; }

  bool operator==(TowerElement const&) const = default;

 private:
  std::size_t level_;
  Terms terms_;
};

enum class Side { Left, Right };

// The tower of rings R_1 = R, R_2, R_3, ... above Q[H] in Q[G] with the
// E-multiplication transported from the iterated endomorphism rings.
class Tower {
 public:
  explicit Tower(FrobeniusSystem system);

  FrobeniusSystem const& system() const noexcept { return *system_; }

  // r_1 (x) ... (x) r_n expanded multilinearly and put in normal form by
  // writing each non-final factor g = g_i h and sliding h into the next slot.
  TowerElement normalize(std::vector<GroupAlgebraElement> const& factors) const;
  TowerElement normalize_word(Word const& word) const;
  TowerElement from_ring(GroupAlgebraElement const& r) const;

  // All m^(n-1) |G| normal-form basis words of level n.
  std::vector<Word> basis(std::size_t level) const;

  // E-multiplication at a common level. Throws ValidationError on mismatch.
  TowerElement multiply(TowerElement const& a, TowerElement const& b) const;

  // Product of elements of different levels, computed at the larger level
  // after including the smaller factor.
  TowerElement product(TowerElement const& a, TowerElement const& b) const;

  TowerElement unit(std::size_t level) const;

  // R_n -> R_{n+1}, a |-> a 1_{n+1}.
  TowerElement include(TowerElement const& a) const;
  TowerElement include_to(TowerElement const& a, std::size_t level) const;

  // Frobenius homomorphism E_m : R_{m+1} -> R_m, m >= 1.
  TowerElement cond_exp(TowerElement const& a) const;

  // e_n in R_{n+1}, n >= 1.
  TowerElement tl_generator(std::size_t n) const;

  // R_m-bimodule structure on R_n (m < n) by multiplying the first
  // (Side::Left) or last (Side::Right) m slots in R_m.
  TowerElement bimodule_action(TowerElement const& x, TowerElement const& a,
                               Side side) const;

  // a (x)_S b, a in R_p and b in R_q, as an element of R_{p+q}.
  TowerElement tensor(TowerElement const& a, TowerElement const& b) const;

  // Dual bases of E_n: x^n_i = x_i (x) 1_{R_n} and y^n_i = 1_{R_n} (x) y_i,
  // both in R_{n+1}.
  std::vector<TowerElement> dual_x(std::size_t n) const;
  std::vector<TowerElement> dual_y(std::size_t n) const;

  // Isomorphism from this tower (E-multiplication) onto the tower of
  // system().twisted(d): multiplies the trailing half of the slots by d^-1.
  TowerElement change_coordinates(TowerElement const& a, CentralizerElement const& d) const;

  std::string to_string(TowerElement const& a) const;

 private:
  void add_tensor(TowerElement& out, std::vector<GroupAlgebraElement> const& factors,
                  Rational const& coeff) const;
  void add_word(TowerElement& out, Word word, Rational const& coeff) const;
  void add_with_middle(TowerElement& out, std::span<std::size_t const> prefix,
                       GroupAlgebraElement const& middle,
                       std::span<std::size_t const> suffix, Rational const& coeff) const;
  void multiply_words(TowerElement& out, Word const& r, Word const& t,
                      Rational const& coeff) const;

  std::shared_ptr<FrobeniusSystem const> system_;
};

}  // namespace depthkit
