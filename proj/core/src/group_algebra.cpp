#include "depthkit/group_algebra.hpp"

#include <sstream>

#include "depthkit/errors.hpp"

namespace depthkit {

GroupAlgebraElement GroupAlgebraElement::basis(std::shared_ptr<PermGroup const> group,
                                               std::size_t g, Rational coeff) {
  GroupAlgebraElement e(std::move(group));
  e.add(g, coeff);
  return e;
}

Rational GroupAlgebraElement::coeff(std::size_t g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(std::size_t g, Rational const& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(GroupAlgebraElement const& rhs) {
  for (auto const& [g, c] : rhs.terms_) add(g, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(GroupAlgebraElement const& rhs) {
  for (auto const& [g, c] : rhs.terms_) add(g, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(Rational const& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

GroupAlgebraElement operator*(GroupAlgebraElement const& a, GroupAlgebraElement const& b) {
  if (a.group_ != b.group_) {
    throw ValidationError("group algebra elements over different groups");
  }
  GroupAlgebraElement out(a.group_);
  for (auto const& [g, x] : a.terms_) {
    for (auto const& [h, y] : b.terms_) out.add(a.group_->product(g, h), x * y);
  }
  return out;
}

GroupAlgebraElement GroupAlgebraElement::left_mul(std::size_t g) const {
  GroupAlgebraElement out(group_);
  for (auto const& [h, c] : terms_) out.terms_.emplace(group_->product(g, h), c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::right_mul(std::size_t g) const {
  GroupAlgebraElement out(group_);
  for (auto const& [h, c] : terms_) out.terms_.emplace(group_->product(h, g), c);
  return out;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto const& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << group_->element(g).to_cycles();
  }
  return os.str();
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  std::size_t const rows = a.size();
  std::size_t const cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational const inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational const f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

std::optional<GroupAlgebraElement> invert(GroupAlgebraElement const& d) {
  auto const& group = d.group();
  std::size_t const n = group->order();
  // (d X)_g = sum_h d_{g h^-1} X_h
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      a[g][h] = d.coeff(group->product(g, group->inverse(h)));
    }
  }
  std::vector<Rational> b(n, 0);
  b[PermGroup::identity()] = 1;
  auto x = solve_linear(std::move(a), std::move(b));
  if (!x) return std::nullopt;
  GroupAlgebraElement inv(group);
  for (std::size_t h = 0; h < n; ++h) inv.add(h, (*x)[h]);
  if (!(inv * d == GroupAlgebraElement::one(group))) return std::nullopt;
  return inv;
}

}  // namespace depthkit
