// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "toricflip/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace toricflip {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0)
      throw Error(ErrorCode::InvalidInput, "matrix dimensions must be positive");
  }

  IntMatrix(std::initializer_list<std::initializer_list<BigInt>> init)
      : IntMatrix(init.size(), init.size() ? init.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto &row : init) {
      if (row.size() != cols_)
        throw Error(ErrorCode::InvalidInput, "ragged matrix initializer");
      std::size_t j = 0;
      for (const auto &v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const IntMatrix &other) const = default;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt &factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  // col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt &factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && (*this)(i, j) != 0) return false;
    return true;
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ",";
        out += (*this)(i, j).str();
      }
      out += "]";
    }
    return out + "]";
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

inline IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::InvalidInput, "matrix dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

/// Fraction-free (Bareiss) determinant.
inline BigInt determinant(IntMatrix m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::InvalidInput, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Solves x * m = b for a row vector x over the rationals. `m` must be
/// square and nonsingular.
inline std::vector<Rational> solve_row(const IntMatrix &m,
                                       const std::vector<BigInt> &b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n)
    throw Error(ErrorCode::InvalidInput, "solve_row dimension mismatch");
  // x * m = b  <=>  m^T x^T = b^T; eliminate on the augmented transpose.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(m(j, i));
    aug[i][n] = Rational(b[i]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::InvalidInput, "singular matrix");
    std::swap(aug[piv], aug[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      const Rational f = aug[i][col] / aug[col][col];
      for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n] / aug[i][i];
  return x;
}

struct SmithForm {
  IntMatrix u; ///< unimodular, rows x rows
  IntMatrix d; ///< diagonal, d(0,0) | d(1,1) | ..., nonnegative
  IntMatrix v; ///< unimodular, cols x cols
};

/// Smith normal form with U * A * V = D.
///
/// Pivots are chosen as the nonzero entry of least absolute value in the
/// active block, ties broken by lowest row then lowest column, so the
/// transforms are reproducible for golden tests.
inline SmithForm smith_normal_form(const IntMatrix &a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      bool found = false;
      std::size_t pr = t, pc = t;
      BigInt best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          BigInt mag = abs(d(i, j));
          if (!found || mag < best) {
            found = true;
            best = std::move(mag);
            pr = i;
            pc = j;
          }
        }
      if (!found) break;

      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const BigInt q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const BigInt q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, 1);
            u.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

} // namespace toricflip
