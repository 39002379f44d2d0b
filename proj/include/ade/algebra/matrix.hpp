#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ade/algebra/polynomial.hpp"
#include "ade/algebra/rational_function.hpp"
#include "ade/errors.hpp"

namespace ade {

/// Row-major dense matrix.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<QPoly>;

namespace detail {

/// Fraction-free (Bareiss) forward elimination on the first `n` columns.
/// Every intermediate entry stays a polynomial because each division by the
/// previous pivot is exact. Returns the sign of the row permutation, or 0 when
/// some column has no pivot.
inline int bareiss_eliminate(PolyMatrix& m, std::size_t n) {
  const Var var = m.rows() ? m(0, 0).var() : Var::t;
  QPoly prev = one_poly(var);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = QPoly(var);
    }
    prev = m(k, k);
  }
  return sign;
}

}  // namespace detail

/// Exact determinant of a square polynomial matrix.
inline QPoly determinant(PolyMatrix m, Var var) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InvalidParameter("determinant of a non-square matrix");
  if (n == 0) return one_poly(var);
  const int sign = detail::bareiss_eliminate(m, n);
  if (sign == 0) return QPoly(var);
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

/// Solve A x = b over the field of rational functions. A is n x n with
/// polynomial entries; elimination is fraction-free and the final
/// back-substitution divides in Q(var).
inline std::vector<RationalFunction> solve_linear(const PolyMatrix& a, const std::vector<QPoly>& b) {
  const std::size_t n = a.rows();
  if (n != a.cols() || b.size() != n) throw InvalidParameter("linear system shape mismatch");
  if (n == 0) return {};
  const Var var = a(0, 0).var();
  PolyMatrix aug(n, n + 1, QPoly(var));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  if (detail::bareiss_eliminate(aug, n) == 0) throw SingularSystem("linear system is singular");
  std::vector<RationalFunction> x(n, RationalFunction(var));
  for (std::size_t i = n; i-- > 0;) {
    RationalFunction acc(aug(i, n));
    for (std::size_t j = i + 1; j < n; ++j)
      if (!aug(i, j).is_zero()) acc = acc - RationalFunction(aug(i, j)) * x[j];
    x[i] = acc / RationalFunction(aug(i, i));
  }
  return x;
}

}  // namespace ade
