#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace depthkit {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major matrix of nonnegative arbitrary-precision integers.
// Rows index simples of the subring S, columns simples of R.
class NonNegMatrix {
 public:
  NonNegMatrix(std::size_t rows, std::size_t cols);
  NonNegMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
  NonNegMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static NonNegMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt const& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, BigInt value);

  NonNegMatrix transpose() const;
  NonNegMatrix operator*(NonNegMatrix const& rhs) const;
  bool operator==(NonNegMatrix const&) const = default;

  bool has_zero_row() const;
  bool has_zero_column() const;
  BigInt max_entry() const;

  NonNegMatrix submatrix(std::vector<std::size_t> const& row_idx,
                         std::vector<std::size_t> const& col_idx) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> entries_;
};

// Zero pattern of a nonnegative matrix, with boolean-semiring arithmetic.
class SupportMatrix {
 public:
  SupportMatrix(std::size_t rows, std::size_t cols);
  SupportMatrix(std::initializer_list<std::initializer_list<bool>> rows);

  static SupportMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool operator()(std::size_t i, std::size_t j) const {
    return bits_[i * cols_ + j] != 0;
  }
  void set(std::size_t i, std::size_t j, bool value) {
    bits_[i * cols_ + j] = value ? 1 : 0;
  }

  SupportMatrix transpose() const;
  SupportMatrix row(std::size_t i) const;
  std::size_t count() const;

  // Every set bit of *this is also set in other.
  bool subset_of(SupportMatrix const& other) const;

  bool operator==(SupportMatrix const&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<unsigned char> bits_;
};

std::ostream& operator<<(std::ostream& os, SupportMatrix const& m);
std::ostream& operator<<(std::ostream& os, NonNegMatrix const& m);

SupportMatrix support(NonNegMatrix const& m);

// OR/AND product. Throws ValidationError when a.cols() != b.rows().
SupportMatrix bool_product(SupportMatrix const& a, SupportMatrix const& b);

// Support of the bracketed power M^[n]: M^[0] = I (rows x rows),
// M^[2k] = (M M^t)^k and M^[2k+1] = M^[2k] M. Computed in the boolean
// semiring; entries of the integer powers are never formed.
SupportMatrix bracketed_power(NonNegMatrix const& m, std::size_t n);
SupportMatrix bracketed_power(SupportMatrix const& m, std::size_t n);

// Integer bracketed power. Exponential entry growth; kept for minimal-q
// reports and as a test oracle.
NonNegMatrix exact_bracketed_power(NonNegMatrix const& m, std::size_t n);

struct Domination {
  bool holds = false;
  std::optional<BigInt> min_q;  // engaged iff holds
};

// Is A <= qB entrywise for some positive integer q? Holds iff
// supp(A) is contained in supp(B); min_q = max ceil(A/B) over B > 0, or 1
// when A is zero.
Domination dominated_by_scalar_multiple(NonNegMatrix const& a,
                                        NonNegMatrix const& b);

// Matrix text format: "rows cols" header, then rows lines of cols
// nonnegative decimal integers. '#' starts a comment running to end of line.
NonNegMatrix parse_matrix(std::istream& in);
NonNegMatrix parse_matrix(std::string const& text);
NonNegMatrix read_matrix_file(std::string const& path);
std::string format_matrix(NonNegMatrix const& m);

}  // namespace depthkit
