#pragma once

#include <utility>

#include <Eigen/Core>

#include "severi/errors.hpp"
#include "severi/exactmath/polynomial.hpp"
#include "severi/exactmath/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<severi::Rational> : GenericNumTraits<severi::Rational> {
  using Real = severi::Rational;
  using NonInteger = severi::Rational;
  using Nested = severi::Rational;
  using Literal = severi::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  // Exact values print in full; no decimal precision applies.
  static constexpr int digits10() { return 0; }
};

// Lets Polynomial sit inside Eigen dense containers and products.
template <>
struct NumTraits<severi::Polynomial> : GenericNumTraits<severi::Polynomial> {
  using Real = severi::Polynomial;
  using NonInteger = severi::Polynomial;
  using Nested = severi::Polynomial;
  using Literal = severi::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 64
  };
  static constexpr int digits10() { return 0; }
};

}  // namespace Eigen

namespace severi {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using PolynomialMatrix = Matrix<Polynomial>;
using PolynomialVector = Vector<Polynomial>;

namespace detail {

template <class Derived>
void require_square(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols())
    throw NonSquare("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

}  // namespace detail

/// Determinant by exact Gaussian elimination. Scalar must be a field with
/// exact arithmetic; the pivot is the first nonzero entry, not the largest.
template <class Derived>
typename Derived::Scalar elimination_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(m);
  Matrix<Scalar> a = m;
  const Eigen::Index size = a.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < size; ++col) {
    Eigen::Index pivot = col;
    while (pivot < size && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == size) return Scalar(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index row = col + 1; row < size; ++row) {
      if (a(row, col) == Scalar(0)) continue;
      const Scalar factor = a(row, col) / a(col, col);
      for (Eigen::Index k = col; k < size; ++k) a(row, k) -= factor * a(col, k);
    }
  }
  return det;
}

/// Laplace expansion along the first row; valid over any commutative ring,
/// used for the symbolic determinant of small polynomial matrices.
template <class Derived>
typename Derived::Scalar cofactor_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(m);
  const Eigen::Index size = m.rows();
  if (size == 0) return Scalar(1);
  if (size == 1) return m(0, 0);
  Scalar det(0);
  Matrix<Scalar> minor(size - 1, size - 1);
  for (Eigen::Index j = 0; j < size; ++j) {
    if (m(0, j) == Scalar(0)) continue;
    for (Eigen::Index r = 1; r < size; ++r)
      for (Eigen::Index c = 0, mc = 0; c < size; ++c)
        if (c != j) minor(r - 1, mc++) = m(r, c);
    const Scalar term = m(0, j) * cofactor_determinant(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

/// Gauss-Jordan inverse over an exact field. Throws Singular.
template <class Derived>
Matrix<typename Derived::Scalar> exact_inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(m);
  const Eigen::Index size = m.rows();
  Matrix<Scalar> a = m;
  Matrix<Scalar> inv = Matrix<Scalar>::Identity(size, size);
  for (Eigen::Index col = 0; col < size; ++col) {
    Eigen::Index pivot = col;
    while (pivot < size && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == size) throw Singular("matrix is singular");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Scalar scale = Scalar(1) / a(col, col);
    a.row(col) *= scale;
    inv.row(col) *= scale;
    for (Eigen::Index row = 0; row < size; ++row) {
      if (row == col || a(row, col) == Scalar(0)) continue;
      const Scalar factor = a(row, col);
      a.row(row) -= factor * a.row(col);
      inv.row(row) -= factor * inv.row(col);
    }
  }
  return inv;
}

RationalMatrix evaluate(const PolynomialMatrix& m, const Bindings& bindings);

/// Symbolic determinant by cofactor expansion.
Polynomial matrix_det(const PolynomialMatrix& m);
/// Determinant of m evaluated at `at`, by exact elimination.
Rational matrix_det(const PolynomialMatrix& m, const Bindings& at);

/// Exact inverse of m evaluated at `at`. Throws Singular.
RationalMatrix matrix_invert(const PolynomialMatrix& m, const Bindings& at);

}  // namespace severi
