#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "depthkit/exact_matrix.hpp"

namespace depthkit {

struct DepthReport {
  std::size_t min_depth = 0;
  std::size_t min_odd_depth = 0;
  std::size_t min_even_depth = 0;
  // Least k with supp M^[j] = supp M^[j+2] for every j >= k.
  std::size_t stabilization_level = 0;
  // supp M^[0], supp M^[1], ..., supp M^[stabilization_level + 3].
  std::vector<SupportMatrix> per_level_supports;
  // Rows J of the submatrix used by ideal_depth (0-based).
  std::optional<std::vector<std::size_t>> ideal_rows;
  // Set by callers that cross-check against the graph method and disagree.
  bool graph_discrepancy = false;
};

// Columns e_1..e_r of M generating an ideal I of R (0-based).
struct IdealSpec {
  std::vector<std::size_t> ideal_cols;
};

// Throws ValidationError if M has a zero row or a zero column.
void require_inclusion_matrix(NonNegMatrix const& m);

// supp M^[n+1] contained in supp M^[n-1], n >= 1.
bool depth_condition(SupportMatrix const& m, std::size_t n);

std::size_t depth_search_cap(NonNegMatrix const& m);

DepthReport min_depth(NonNegMatrix const& m);

// Depth of the submatrix on rows J = {i : M(i,j) > 0 for some ideal column j}
// and the ideal columns.
DepthReport ideal_depth(NonNegMatrix const& m, IdealSpec const& ideal);

enum class BimoduleSides { SS, SR, RS };

// Simple constituents of C_n(R,S) viewed as a bimodule over the given sides:
//   S-S: supp M^[2n]        (S-simples x S-simples)
//   S-R: supp M^[2n-1]      (S-simples x R-simples)
//   R-S: supp M^[2n-1]^t    (R-simples x S-simples)
// Row i lists the constituents of the i-th block of the left action.
SupportMatrix simples_support(NonNegMatrix const& m, std::size_t n,
                              BimoduleSides sides);

// Over a semisimple ring, two modules are h-equivalent iff their sets of
// simple constituents agree. Rows are compared as modules, so a matrix
// argument tests row-wise h-equivalence.
bool h_equivalent(SupportMatrix const& a, SupportMatrix const& b);

std::string to_json(DepthReport const& report, bool pretty = false);

}  // namespace depthkit
