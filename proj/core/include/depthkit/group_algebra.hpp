#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "depthkit/perm_group.hpp"

namespace depthkit {

using Rational = boost::multiprecision::cpp_rational;

// Element of Q[G]: finitely supported map from group-element index to a
// rational. Zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  using Terms = std::map<std::size_t, Rational>;

  explicit GroupAlgebraElement(std::shared_ptr<PermGroup const> group)
      : group_(std::move(group)) {}

  static GroupAlgebraElement basis(std::shared_ptr<PermGroup const> group,
                                   std::size_t g, Rational coeff = 1);
  static GroupAlgebraElement one(std::shared_ptr<PermGroup const> group) {
    return basis(std::move(group), PermGroup::identity());
  }
  static GroupAlgebraElement scalar(std::shared_ptr<PermGroup const> group, Rational c) {
    return basis(std::move(group), PermGroup::identity(), std::move(c));
  }

  std::shared_ptr<PermGroup const> const& group() const noexcept { return group_; }
  Terms const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(std::size_t g) const;

  void add(std::size_t g, Rational const& c);

  GroupAlgebraElement& operator+=(GroupAlgebraElement const& rhs);
  GroupAlgebraElement& operator-=(GroupAlgebraElement const& rhs);
  GroupAlgebraElement& operator*=(Rational const& c);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, GroupAlgebraElement const& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, GroupAlgebraElement const& b) {
    return a -= b;
  }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, Rational const& c) {
    return a *= c;
  }
  friend GroupAlgebraElement operator*(GroupAlgebraElement const& a,
                                       GroupAlgebraElement const& b);

  // g * this and this * g for a group element index g.
  GroupAlgebraElement left_mul(std::size_t g) const;
  GroupAlgebraElement right_mul(std::size_t g) const;

  bool operator==(GroupAlgebraElement const& rhs) const { return terms_ == rhs.terms_; }

  std::string to_string() const;

 private:
  std::shared_ptr<PermGroup const> group_;
  Terms terms_;
};

// Exact Gaussian elimination over Q. Returns some solution of A x = b, or
// nothing when the system is inconsistent. A is row-major rows x cols.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b);

// Two-sided inverse in Q[G], found by solving d X = 1. Empty if singular.
std::optional<GroupAlgebraElement> invert(GroupAlgebraElement const& d);

}  // namespace depthkit
