#include "depthkit/depth.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "depthkit/errors.hpp"

namespace depthkit {

void require_inclusion_matrix(NonNegMatrix const& m) {
  if (m.has_zero_row()) {
    throw ValidationError("invalid inclusion matrix: zero row");
  }
  if (m.has_zero_column()) {
    throw ValidationError("invalid inclusion matrix: zero column");
  }
}

bool depth_condition(SupportMatrix const& m, std::size_t n) {
  if (n == 0) throw ValidationError("depth is defined for n >= 1");
  return bracketed_power(m, n + 1).subset_of(bracketed_power(m, n - 1));
}

std::size_t depth_search_cap(NonNegMatrix const& m) {
  return 2 * (m.rows() + m.cols()) + 2;
}

DepthReport min_depth(NonNegMatrix const& m) {
  require_inclusion_matrix(m);
  SupportMatrix const s = support(m);
  SupportMatrix const mmt = bool_product(s, s.transpose());
  std::size_t const cap = depth_search_cap(m);

  DepthReport report;
  auto& powers = report.per_level_supports;
  powers.push_back(SupportMatrix::identity(m.rows()));
  powers.push_back(s);
  auto power = [&](std::size_t k) -> SupportMatrix const& {
    while (powers.size() <= k) {
      powers.push_back(bool_product(mmt, powers[powers.size() - 2]));
    }
    return powers[k];
  };

  for (std::size_t n = 1; n <= cap; ++n) {
    if (report.min_odd_depth && report.min_even_depth) break;
    std::size_t& slot = (n % 2 == 1) ? report.min_odd_depth : report.min_even_depth;
    if (slot) continue;
    if (power(n + 1).subset_of(power(n - 1))) slot = n;
  }
  if (!report.min_odd_depth || !report.min_even_depth) {
    throw ValidationError("bracketed powers did not stabilize within " +
                          std::to_string(cap) + " levels");
  }
  report.min_depth = std::min(report.min_odd_depth, report.min_even_depth);

  // The depth conditions at the two parities give supp M^[n-1] = supp M^[n+1]
  // (the reverse inclusion always holds for valid M), so both parities are
  // stable from max(odd, even) - 1 on. Scan down for the exact level.
  std::size_t top = std::max(report.min_odd_depth, report.min_even_depth) - 1;
  power(top + 3);
  std::size_t level = top;
  while (level > 0 && power(level - 1) == power(level + 1)) --level;
  report.stabilization_level = level;
  powers.erase(powers.begin() + static_cast<std::ptrdiff_t>(level + 4), powers.end());
  return report;
}

DepthReport ideal_depth(NonNegMatrix const& m, IdealSpec const& ideal) {
  require_inclusion_matrix(m);
  if (ideal.ideal_cols.empty()) throw ValidationError("ideal must be nonempty");
  std::set<std::size_t> cols(ideal.ideal_cols.begin(), ideal.ideal_cols.end());
  for (std::size_t c : cols) {
    if (c >= m.cols()) throw ValidationError("ideal column out of range");
  }
  std::vector<std::size_t> col_idx(cols.begin(), cols.end());
  std::vector<std::size_t> row_idx;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool meets = std::any_of(col_idx.begin(), col_idx.end(),
                             [&](std::size_t j) { return m(i, j) > 0; });
    if (meets) row_idx.push_back(i);
  }
  for (std::size_t j : col_idx) {
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i) zero = m(i, j) == 0;
    if (zero) throw ValidationError("ideal column is entirely zero");
  }
  DepthReport report = min_depth(m.submatrix(row_idx, col_idx));
  report.ideal_rows = std::move(row_idx);
  return report;
}

SupportMatrix simples_support(NonNegMatrix const& m, std::size_t n,
                              BimoduleSides sides) {
  if (n == 0) throw ValidationError("C_n is tensor power n >= 1");
  require_inclusion_matrix(m);
  switch (sides) {
    case BimoduleSides::SS:
      return bracketed_power(m, 2 * n);
    case BimoduleSides::SR:
      return bracketed_power(m, 2 * n - 1);
    case BimoduleSides::RS:
      return bracketed_power(m, 2 * n - 1).transpose();
  }
  throw ValidationError("unknown bimodule sides");
}

bool h_equivalent(SupportMatrix const& a, SupportMatrix const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("h-equivalence needs the same simple index set");
  }
  return a == b;
}

}  // namespace depthkit
