#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "depthkit/depth.hpp"
#include "depthkit/exact_matrix.hpp"

namespace depthkit {

// Young diagram: weakly decreasing positive parts.
class Partition {
 public:
  explicit Partition(std::vector<std::size_t> parts);

  std::vector<std::size_t> const& parts() const noexcept { return parts_; }
  std::size_t weight() const noexcept { return weight_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::size_t part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  // Number of cells that can be added keeping a Young diagram.
  std::size_t addable_cells() const;

  // mu is obtained from *this by adding exactly one cell.
  bool covered_by(Partition const& mu) const;

  std::string to_string() const;  // "[2,1]"

  auto operator<=>(Partition const&) const = default;

 private:
  std::vector<std::size_t> parts_;
  std::size_t weight_;
};

// All partitions of n, descending lexicographic: [n] first, [1^n] last.
std::vector<Partition> partitions(std::size_t n);

// Inclusion matrix of C S_n in C S_{n+1}: rows partitions(n), columns
// partitions(n+1), entry 1 iff the column adds one cell to the row.
NonNegMatrix branching_matrix(std::size_t n);

// Minimum depth of S_n in S_{n+1} from its branching matrix.
DepthReport sym_depth(std::size_t n);

}  // namespace depthkit
