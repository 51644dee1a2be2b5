#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "gorcurve/error.hpp"
#include "gorcurve/integer.hpp"

namespace gorcurve {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      ensure(row.size() == cols_, ErrorKind::WrongShape, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Int> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  // Matrix with row `skip_row` and column `skip_col` removed.
  IntMatrix minor_matrix(std::size_t skip_row, std::size_t skip_col) const {
    IntMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
      if (i == skip_row) continue;
      for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
        if (j == skip_col) continue;
        out(oi, oj++) = (*this)(i, j);
      }
      ++oi;
    }
    return out;
  }

  // Exact product with an integer vector.
  std::vector<Int> apply(std::span<const Int> v) const {
    ensure(v.size() == cols_, ErrorKind::WrongShape, "matrix-vector size mismatch");
    std::vector<Int> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      Wide acc = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        acc = checked::add<Wide>(acc, checked::mul<Wide>((*this)(i, j), v[j]));
      out[i] = checked::narrow(acc);
    }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

namespace detail {

using WideRows = std::vector<std::vector<Wide>>;

inline WideRows widen(const IntMatrix& m) {
  WideRows out(m.rows(), std::vector<Wide>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

struct BareissResult {
  std::size_t rank = 0;
  Wide last_pivot = 1;
  int sign = 1;
};

// Fraction-free elimination in place. Every intermediate entry is a minor of
// the input, so the division by the previous pivot is exact.
inline BareissResult bareiss(WideRows& a) {
  BareissResult res;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  Wide prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      res.sign = -res.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Wide lhs = checked::mul(a[r][c], a[i][j]);
        Wide rhs = checked::mul(a[i][c], a[r][j]);
        a[i][j] = checked::sub(lhs, rhs) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace detail

// Exact rank by Bareiss elimination.
inline std::size_t rank(const IntMatrix& m) {
  auto rows = detail::widen(m);
  return detail::bareiss(rows).rank;
}

inline Wide determinant(const IntMatrix& m) {
  ensure(m.square(), ErrorKind::WrongShape, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  auto rows = detail::widen(m);
  auto res = detail::bareiss(rows);
  if (res.rank < m.rows()) return 0;
  return res.sign * res.last_pivot;
}

inline Wide cofactor(const IntMatrix& m, std::size_t i, std::size_t j) {
  Wide minor = m.rows() == 1 ? Wide{1} : determinant(m.minor_matrix(i, j));
  return (i + j) % 2 == 0 ? minor : -minor;
}

// Column `col` of adj(m); adj(m)(j, col) is the (col, j) cofactor.
inline std::vector<Wide> adjugate_column(const IntMatrix& m, std::size_t col) {
  ensure(m.square(), ErrorKind::WrongShape, "adjugate of a non-square matrix");
  std::vector<Wide> out(m.rows());
  for (std::size_t j = 0; j < m.rows(); ++j) out[j] = cofactor(m, col, j);
  return out;
}

// Signed maximal minors of a 3x4 matrix: entry j is (-1)^j times the
// determinant with column j removed, so that m * result = 0.
inline std::array<Wide, 4> cross_product(const IntMatrix& m) {
  ensure(m.rows() == 3 && m.cols() == 4, ErrorKind::WrongShape, "cross product needs a 3x4 matrix");
  std::array<Wide, 4> out{};
  for (std::size_t j = 0; j < 4; ++j) {
    IntMatrix sub(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0, sk = 0; k < 4; ++k)
        if (k != j) sub(i, sk++) = m(i, k);
    Wide d = determinant(sub);
    out[j] = j % 2 == 0 ? d : -d;
  }
  return out;
}

}  // namespace gorcurve
