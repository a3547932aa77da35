#include "depthkit/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "depthkit/errors.hpp"

namespace depthkit {

Partition::Partition(std::vector<std::size_t> parts)
    : parts_(std::move(parts)),
      weight_(std::accumulate(parts_.begin(), parts_.end(), std::size_t{0})) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw ValidationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ValidationError("partition parts must be nonincreasing");
    }
  }
}

std::size_t Partition::addable_cells() const {
  // One at the end of each row that is strictly shorter than the row above,
  // plus the first row and a new row at the bottom.
  std::size_t count = 1;
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] < parts_[i - 1]) ++count;
  }
  return count + (parts_.empty() ? 0 : 1);
}

bool Partition::covered_by(Partition const& mu) const {
  if (mu.weight() != weight_ + 1) return false;
  std::size_t const len = std::max(length(), mu.length());
  for (std::size_t i = 0; i < len; ++i) {
    if (mu.part(i) < part(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

namespace {

void generate(std::size_t remaining, std::size_t max_part,
              std::vector<std::size_t>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(std::size_t n) {
  if (n == 0) throw ValidationError("partitions(n) needs n >= 1");
  std::vector<Partition> out;
  std::vector<std::size_t> prefix;
  generate(n, n, prefix, out);
  return out;
}

NonNegMatrix branching_matrix(std::size_t n) {
  auto const rows = partitions(n);
  auto const cols = partitions(n + 1);
  NonNegMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (rows[i].covered_by(cols[j])) m.set(i, j, 1);
  return m;
}

DepthReport sym_depth(std::size_t n) { return min_depth(branching_matrix(n)); }

}  // namespace depthkit
