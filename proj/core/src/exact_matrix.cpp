#include "depthkit/exact_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "depthkit/errors.hpp"

namespace depthkit {

namespace {

void require_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw ValidationError("matrix dimensions must be positive");
  }
}

}  // namespace

NonNegMatrix::NonNegMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  require_shape(rows, cols);
}

NonNegMatrix::NonNegMatrix(std::size_t rows, std::size_t cols,
                           std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_shape(rows, cols);
  if (entries_.size() != rows * cols) {
    throw ValidationError("entry count does not match matrix dimensions");
  }
  for (auto const& e : entries_) {
    if (e < 0) throw ValidationError("matrix entries must be nonnegative");
  }
}

NonNegMatrix::NonNegMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  require_shape(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (auto const& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    for (long v : r) {
      if (v < 0) throw ValidationError("matrix entries must be nonnegative");
      entries_.emplace_back(v);
    }
  }
}

NonNegMatrix NonNegMatrix::identity(std::size_t n) {
  NonNegMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

void NonNegMatrix::set(std::size_t i, std::size_t j, BigInt value) {
  if (value < 0) throw ValidationError("matrix entries must be nonnegative");
  entries_[i * cols_ + j] = std::move(value);
}

NonNegMatrix NonNegMatrix::transpose() const {
  NonNegMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t.entries_[j * rows_ + i] = (*this)(i, j);
  return t;
}

NonNegMatrix NonNegMatrix::operator*(NonNegMatrix const& rhs) const {
  if (cols_ != rhs.rows_) throw ValidationError("dimension mismatch in product");
  NonNegMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      auto const& a = (*this)(i, j);
      if (a == 0) continue;
      for (std::size_t k = 0; k < rhs.cols_; ++k) {
        auto const& b = rhs(j, k);
        if (b != 0) out.entries_[i * rhs.cols_ + k] += a * b;
      }
    }
  }
  return out;
}

bool NonNegMatrix::has_zero_row() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < cols_ && zero; ++j) zero = (*this)(i, j) == 0;
    if (zero) return true;
  }
  return false;
}

bool NonNegMatrix::has_zero_column() const {
  for (std::size_t j = 0; j < cols_; ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < rows_ && zero; ++i) zero = (*this)(i, j) == 0;
    if (zero) return true;
  }
  return false;
}

BigInt NonNegMatrix::max_entry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

NonNegMatrix NonNegMatrix::submatrix(std::vector<std::size_t> const& row_idx,
                                     std::vector<std::size_t> const& col_idx) const {
  NonNegMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t a = 0; a < row_idx.size(); ++a) {
    for (std::size_t b = 0; b < col_idx.size(); ++b) {
      if (row_idx[a] >= rows_ || col_idx[b] >= cols_) {
        throw ValidationError("submatrix index out of range");
      }
      out.entries_[a * col_idx.size() + b] = (*this)(row_idx[a], col_idx[b]);
    }
  }
  return out;
}

SupportMatrix::SupportMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * cols, 0) {
  require_shape(rows, cols);
}

SupportMatrix::SupportMatrix(std::initializer_list<std::initializer_list<bool>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  require_shape(rows_, cols_);
  bits_.reserve(rows_ * cols_);
  for (auto const& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    for (bool b : r) bits_.push_back(b ? 1 : 0);
  }
}

SupportMatrix SupportMatrix::identity(std::size_t n) {
  SupportMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

SupportMatrix SupportMatrix::transpose() const {
  SupportMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

SupportMatrix SupportMatrix::row(std::size_t i) const {
  SupportMatrix r(1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r.set(0, j, (*this)(i, j));
  return r;
}

std::size_t SupportMatrix::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

bool SupportMatrix::subset_of(SupportMatrix const& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ValidationError("support comparison of differently shaped matrices");
  }
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (bits_[k] && !other.bits_[k]) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, SupportMatrix const& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (m(i, j) ? 'T' : 'F');
    os << (i + 1 == m.rows() ? "]" : "\n");
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, NonNegMatrix const& m) {
  return os << format_matrix(m);
}

SupportMatrix support(NonNegMatrix const& m) {
  SupportMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s.set(i, j, m(i, j) > 0);
  return s;
}

SupportMatrix bool_product(SupportMatrix const& a, SupportMatrix const& b) {
  if (a.cols() != b.rows()) {
    throw ValidationError("dimension mismatch in boolean product");
  }
  SupportMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j)) continue;
      for (std::size_t k = 0; k < b.cols(); ++k) {
        if (b(j, k)) out.set(i, k, true);
      }
    }
  }
  return out;
}

SupportMatrix bracketed_power(SupportMatrix const& m, std::size_t n) {
  SupportMatrix const mmt = bool_product(m, m.transpose());
  SupportMatrix acc = SupportMatrix::identity(m.rows());
  for (std::size_t k = 0; k < n / 2; ++k) acc = bool_product(acc, mmt);
  if (n % 2 == 1) acc = bool_product(acc, m);
  return acc;
}

SupportMatrix bracketed_power(NonNegMatrix const& m, std::size_t n) {
  return bracketed_power(support(m), n);
}

NonNegMatrix exact_bracketed_power(NonNegMatrix const& m, std::size_t n) {
  NonNegMatrix const mmt = m * m.transpose();
  NonNegMatrix acc = NonNegMatrix::identity(m.rows());
  for (std::size_t k = 0; k < n / 2; ++k) acc = acc * mmt;
  if (n % 2 == 1) acc = acc * m;
  return acc;
}

Domination dominated_by_scalar_multiple(NonNegMatrix const& a,
                                        NonNegMatrix const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("dimension mismatch in domination test");
  }
  BigInt q = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      auto const& x = a(i, j);
      auto const& y = b(i, j);
      if (x == 0) continue;
      if (y == 0) return {};
      BigInt ratio = (x + y - 1) / y;
      if (ratio > q) q = std::move(ratio);
    }
  }
  return {true, std::move(q)};
}

}  // namespace depthkit
