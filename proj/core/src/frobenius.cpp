#include "depthkit/frobenius.hpp"

#include "depthkit/errors.hpp"

namespace depthkit {

CentralizerElement::CentralizerElement(GroupAlgebraElement d, FrobeniusSystem const& system)
    : d_(std::move(d)), d_inv_(system.group()) {
  if (d_.group() != system.group()) {
    throw ValidationError("centralizer element lives over a different group");
  }
  for (std::size_t h : system.subgroup_elements()) {
    if (!(d_.left_mul(h) == d_.right_mul(h))) {
      throw ValidationError("d does not commute with the subgroup element " +
                            system.group()->element(h).to_cycles());
    }
  }
  auto inv = invert(d_);
  if (!inv) throw ValidationError("d is not invertible in the group algebra");
  d_inv_ = std::move(*inv);
}

FrobeniusSystem FrobeniusSystem::standard(std::shared_ptr<PermGroup const> group,
                                          PermGroup const& subgroup) {
  FrobeniusSystem s;
  s.in_subgroup_ = group->embed(subgroup);
  s.group_ = std::move(group);
  auto const& g = *s.group_;
  std::size_t const n = g.order();
  for (std::size_t h = s.in_subgroup_.find_first(); h != ElementSet::npos;
       h = s.in_subgroup_.find_next(h)) {
    s.subgroup_.push_back(h);
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  s.coset_.assign(n, kUnset);
  s.h_part_.assign(n, kUnset);
  // Elements are sorted, so scanning in index order picks the least element
  // of each left coset, and the identity represents H itself.
  for (std::size_t x = 0; x < n; ++x) {
    if (s.coset_[x] != kUnset) continue;
    std::size_t const i = s.reps_.size();
    s.reps_.push_back(x);
    for (std::size_t h : s.subgroup_) {
      std::size_t const xh = g.product(x, h);
      s.coset_[xh] = i;
      s.h_part_[xh] = h;
    }
  }

  s.e_values_.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    s.e_values_.push_back(s.in_subgroup_.test(x) ? s.element(x)
                                                 : GroupAlgebraElement(s.group_));
  }
  for (std::size_t rep : s.reps_) {
    s.x_.push_back(s.element(rep));
    s.y_.push_back(s.element(g.inverse(rep)));
  }
  return s;
}

FrobeniusSystem FrobeniusSystem::twisted(CentralizerElement const& d) const {
  FrobeniusSystem f = *this;
  for (std::size_t x = 0; x < group_->order(); ++x) {
    f.e_values_[x] = expectation(d.value().right_mul(x));
  }
  for (auto& w : f.y_) w = d.inverse() * w;
  return f;
}

FrobeniusSystem FrobeniusSystem::with_dual_bases(std::vector<GroupAlgebraElement> x,
                                                 std::vector<GroupAlgebraElement> y) const {
  if (x.size() != y.size()) throw ValidationError("dual bases differ in length");
  FrobeniusSystem f = *this;
  f.x_ = std::move(x);
  f.y_ = std::move(y);
  return f;
}

GroupAlgebraElement FrobeniusSystem::expectation(GroupAlgebraElement const& r) const {
  GroupAlgebraElement out(group_);
  for (auto const& [g, c] : r.terms()) out += e_values_[g] * c;
  return out;
}

std::optional<std::string> FrobeniusSystem::check_equations() const {
  for (std::size_t g = 0; g < group_->order(); ++g) {
    GroupAlgebraElement const r = element(g);
    GroupAlgebraElement left(group_);
    GroupAlgebraElement right(group_);
    for (std::size_t i = 0; i < x_.size(); ++i) {
      left += expectation(r * x_[i]) * y_[i];
      right += x_[i] * expectation(y_[i] * r);
    }
    std::string const name = group_->element(g).to_cycles();
    if (!(left == r)) {
      return "sum_i E(r x_i) y_i != r for r = " + name + " (got " + left.to_string() + ")";
    }
    if (!(right == r)) {
      return "sum_i x_i E(y_i r) != r for r = " + name + " (got " + right.to_string() + ")";
    }
    for (auto const& value : e_values_[g].terms()) {
      if (!in_subgroup_.test(value.first)) {
        return "E(" + name + ") leaves the subgroup algebra";
      }
    }
  }
  for (std::size_t s1 : subgroup_) {
    for (std::size_t s2 : subgroup_) {
      for (std::size_t g = 0; g < group_->order(); ++g) {
        std::size_t const sgs = group_->product(group_->product(s1, g), s2);
        if (!(e_values_[sgs] == e_values_[g].left_mul(s1).right_mul(s2))) {
          return "E is not a subgroup-bimodule map at r = " +
                 group_->element(g).to_cycles();
        }
      }
    }
  }
  return std::nullopt;
}

GeneratorWitness generator_criterion(FrobeniusSystem const& system) {
  auto const& group = system.group();
  GroupAlgebraElement const one = system.one();
  GeneratorWitness w;
  if (system.expectation(one) == one) {
    w.pairs.emplace_back(one, one);
  } else {
    // Solve E(r) = 1 for r in Q[G]; column g of the system is E(g).
    std::size_t const n = group->order();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
    for (std::size_t g = 0; g < n; ++g) {
      for (auto const& [k, c] : system.expectation(g).terms()) a[k][g] = c;
    }
    std::vector<Rational> b(n, 0);
    b[PermGroup::identity()] = 1;
    auto r = solve_linear(std::move(a), std::move(b));
    if (!r) return w;
    for (std::size_t g = 0; g < n; ++g) {
      if ((*r)[g] != 0) {
        w.pairs.emplace_back(GroupAlgebraElement::basis(group, g, (*r)[g]), one);
      }
    }
  }
  GroupAlgebraElement total(group);
  for (auto const& [a, c] : w.pairs) total += system.expectation(a * c);
  w.holds = total == one;
  return w;
}

}  // namespace depthkit
