#pragma once

// Fraction-free (Bareiss) Gauss-Jordan elimination over an integral domain.
//
// Every division performed is exact, so the routine runs unchanged over Z,
// Z[t^{1/2}, t^{-1/2}], or any Scalar with an exact division. The division is
// looked up through ExactDivision<Scalar>, which defaults to an ADL call of
// exact_div(a, b).

#include <optional>
#include <type_traits>

#include <Eigen/Core>

#include "lsa/errors.hpp"
#include "lsa/laurent.hpp"

namespace lsa {

template <typename Scalar>
struct ExactDivision {
  Scalar operator()(const Scalar& a, const Scalar& b) const { return exact_div(a, b); }
};

template <>
struct ExactDivision<BigInt> {
  BigInt operator()(const BigInt& a, const BigInt& b) const {
    if (b == 0) throw Error(ErrorKind::ZeroDenominator, "integer division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw Error(ErrorKind::NonExactDivision, "integer quotient is not exact");
    return q;
  }
};

/// A * scaled_inverse == scale * I, with scale = ±det(A).
template <typename Scalar>
struct ScaledInverse {
  DenseMatrix<Scalar> scaled_inverse;
  Scalar scale;
};

/// Returns std::nullopt when A is singular.
template <typename Derived>
std::optional<ScaledInverse<typename Derived::Scalar>> fraction_free_inverse(
    const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  const ExactDivision<Scalar> div;
  if (a.rows() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
  const Index n = a.rows();

  DenseMatrix<Scalar> m(n, 2 * n);
  m.leftCols(n) = a;
  m.rightCols(n).setZero();
  for (Index i = 0; i < n; ++i) m(i, n + i) = Scalar(1);

  Scalar previous(1);
  for (Index k = 0; k < n; ++k) {
    Index pivot = k;
    while (pivot < n && m(pivot, k) == Scalar(0)) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) m.row(k).swap(m.row(pivot));

    const Scalar pk = m(k, k);
    for (Index i = 0; i < n; ++i) {
      if (i == k) continue;
      const Scalar mik = m(i, k);
      for (Index j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        m(i, j) = div(pk * m(i, j) - mik * m(k, j), previous);
      }
      m(i, k) = Scalar(0);
    }
    previous = pk;
  }
  // The left block is now previous * I.
  return ScaledInverse<Scalar>{m.rightCols(n), previous};
}

/// Determinant by fraction-free elimination.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  const ExactDivision<Scalar> div;
  if (a.rows() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  const Index n = a.rows();
  if (n == 0) return Scalar(1);

  DenseMatrix<Scalar> m = a;
  Scalar previous(1);
  bool negate = false;
  for (Index k = 0; k + 1 < n; ++k) {
    Index pivot = k;
    while (pivot < n && m(pivot, k) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) m(i, j) = div(m(k, k) * m(i, j) - m(i, k) * m(k, j), previous);
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

}  // namespace lsa
