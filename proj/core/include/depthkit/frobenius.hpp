#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "depthkit/group_algebra.hpp"
#include "depthkit/perm_group.hpp"

namespace depthkit {

class FrobeniusSystem;

// Invertible d in the centralizer of Q[H] inside Q[G].
class CentralizerElement {
 public:
  // Throws ValidationError if d does not commute with H or is singular.
  CentralizerElement(GroupAlgebraElement d, FrobeniusSystem const& system);

  GroupAlgebraElement const& value() const noexcept { return d_; }
  GroupAlgebraElement const& inverse() const noexcept { return d_inv_; }

 private:
  GroupAlgebraElement d_;
  GroupAlgebraElement d_inv_;
};

// Frobenius coordinate system (E; x_i; y_i) of Q[G] over Q[H].
//
// Q[G] is free as a right Q[H]-module on a left transversal g_1 = 1, ...,
// g_m; every g factors uniquely as g = g_i h. The standard system has
// E(g) = g for g in H and 0 otherwise, x_i = g_i and y_i = g_i^-1.
class FrobeniusSystem {
 public:
  static FrobeniusSystem standard(std::shared_ptr<PermGroup const> group,
                                  PermGroup const& subgroup);

  // The system F = E(d -), z_i = x_i, w_i = d^-1 y_i.
  FrobeniusSystem twisted(CentralizerElement const& d) const;

  // Same E and transversal, replaced dual bases. Used to build negative
  // controls; no equations are checked.
  FrobeniusSystem with_dual_bases(std::vector<GroupAlgebraElement> x,
                                  std::vector<GroupAlgebraElement> y) const;

  std::shared_ptr<PermGroup const> const& group() const noexcept { return group_; }
  std::size_t index() const noexcept { return reps_.size(); }  // [G : H]
  std::vector<std::size_t> const& coset_reps() const noexcept { return reps_; }
  std::vector<std::size_t> const& subgroup_elements() const noexcept { return subgroup_; }
  bool in_subgroup(std::size_t g) const { return in_subgroup_.test(g); }

  // g = g_i h; returns (i, h).
  std::pair<std::size_t, std::size_t> decompose(std::size_t g) const {
    return {coset_[g], h_part_[g]};
  }

  GroupAlgebraElement const& expectation(std::size_t g) const { return e_values_[g]; }
  GroupAlgebraElement expectation(GroupAlgebraElement const& r) const;

  std::vector<GroupAlgebraElement> const& x() const noexcept { return x_; }
  std::vector<GroupAlgebraElement> const& y() const noexcept { return y_; }

  GroupAlgebraElement one() const { return GroupAlgebraElement::one(group_); }
  GroupAlgebraElement element(std::size_t g) const {
    return GroupAlgebraElement::basis(group_, g);
  }

  // sum_i E(r x_i) y_i = r = sum_i x_i E(y_i r) on every group element, and
  // E(s r s') = s E(r) s' for s, s' in H. Returns the first failure.
  std::optional<std::string> check_equations() const;

 private:
  FrobeniusSystem() = default;

  std::shared_ptr<PermGroup const> group_;
  ElementSet in_subgroup_;
  std::vector<std::size_t> subgroup_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> coset_;
  std::vector<std::size_t> h_part_;
  std::vector<GroupAlgebraElement> e_values_;
  std::vector<GroupAlgebraElement> x_;
  std::vector<GroupAlgebraElement> y_;
};

struct GeneratorWitness {
  bool holds = false;
  // sum_j E(a_j c_j) = 1 when holds.
  std::vector<std::pair<GroupAlgebraElement, GroupAlgebraElement>> pairs;
};

// Q[G] is a generator over Q[H] iff 1 lies in the image of E; the witness
// pairs are re-evaluated before returning.
GeneratorWitness generator_criterion(FrobeniusSystem const& system);

}  // namespace depthkit
