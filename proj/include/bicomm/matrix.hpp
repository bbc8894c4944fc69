#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bicomm/rational.hpp"

namespace bicomm {

// Dense matrix over the rationals. Ranks are computed by fraction-free
// (Bareiss) elimination over the integers after clearing denominators, so no
// floating point is ever involved.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[index(i, j)]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[index(i, j)]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    }
    return t;
  }

  // Rank by single-step Bareiss elimination. Each row is first scaled by the
  // lcm of its denominators (and stripped of its integer content), which
  // leaves the rank unchanged. Pivots are chosen as the first row with a
  // nonzero entry in the current column; every division below is exact by
  // the Bareiss identity, so mpz_divexact applies.
  std::size_t rank() const {
    std::vector<std::vector<Integer>> m(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::vector<Integer>& row = m[i];
      row.resize(cols_);
      Integer lcm = 1;
      for (std::size_t j = 0; j < cols_; ++j) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), at(i, j).denominator().get_mpz_t());
      }
      Integer content = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        row[j] = at(i, j).numerator() * (lcm / at(i, j).denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), row[j].get_mpz_t());
      }
      if (content > 1) {
        for (std::size_t j = 0; j < cols_; ++j) {
          mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), content.get_mpz_t());
        }
      }
    }

    std::size_t r = 0;
    Integer prev = 1;
    Integer tmp;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t pivot = rows_;
      for (std::size_t i = r; i < rows_; ++i) {
        if (m[i][c] != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot == rows_) continue;
      std::swap(m[r], m[pivot]);
      const std::vector<Integer>& pr = m[r];
      for (std::size_t i = r + 1; i < rows_; ++i) {
        std::vector<Integer>& ri = m[i];
        for (std::size_t j = c + 1; j < cols_; ++j) {
          tmp = pr[c] * ri[j] - ri[c] * pr[j];
          mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
          std::swap(ri[j], tmp);
        }
        ri[c] = 0;
      }
      prev = pr[c];
      ++r;
    }
    return r;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;

  std::size_t index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
    return i * cols_ + j;
  }
};

// One exact solution of A x = b with free variables set to zero, or nullopt
// when the system is inconsistent. Plain Gauss-Jordan over Q; meant for the
// small systems that arise when expressing vectors in a finite basis.
inline std::optional<std::vector<Rational>> solve_linear(const Matrix& a,
                                                         const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side size mismatch");
  std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Rational>> m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    m[i].reserve(cols + 1);
    for (std::size_t j = 0; j < cols; ++j) m[i].push_back(a.at(i, j));
    m[i].push_back(b[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    Rational inv = inverse(m[r][c]);
    for (std::size_t j = c; j <= cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!m[i][cols].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
  return x;
}

}  // namespace bicomm
