#pragma once

// Exact dense linear algebra over the integers and the rationals: fraction
// free determinants, Smith normal form with transforms, congruence
// diagonalization, integer kernels and saturated row spaces.

#include "og6/scalar.hpp"

#include <utility>

namespace og6 {

/// Determinant by Bareiss fraction-free elimination. Every intermediate
/// quotient is exact, so Scalar may be any integral domain type.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(
    const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = input.rows();
  if (input.cols() != n) throw LatticeError("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);

  Matrix<Scalar> a = input;
  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// u * m * v = d with d diagonal, nonnegative, and d(0,0) | d(1,1) | ...
/// For rectangular m, d has the shape of m.
struct SmithDecomposition {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  /// Diagonal entries (length min(rows, cols)).
  [[nodiscard]] std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith(const IntMatrix& m);

/// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Basis (as columns) of the integer kernel {x in Z^n : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Basis (as rows) of the saturation of the row space of m inside Z^n.
IntMatrix saturated_row_space(const IntMatrix& m);

/// Basis (as rows) of the Z-span of the rows of m.
IntMatrix row_space_basis(const IntMatrix& m);

/// Signs of a congruence diagonalization of a symmetric rational matrix.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Symmetric congruence diagonalization over exact rationals. A diagonal
/// pivot is used when one exists; otherwise a hyperbolic 2x2 block is split
/// off, contributing one positive and one negative square.
template <typename Derived>
Inertia congruence_inertia(const Eigen::MatrixBase<Derived>& input) {
  const Eigen::Index n = input.rows();
  if (input.cols() != n) throw LatticeError("inertia of a non-square matrix");
  RatMatrix a = input.template cast<Rational>();
  if (a != a.transpose()) throw LatticeError("inertia of a non-symmetric matrix");

  Inertia result;
  auto swap_index = [&a](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    a.col(i).swap(a.col(j));
  };

  Eigen::Index k = 0;
  while (k < n) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, pivot) == 0) ++pivot;
    if (pivot < n) {
      swap_index(k, pivot);
      const Rational p = a(k, k);
      (p > 0 ? result.positive : result.negative) += 1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        const Rational f = a(i, k) / p;
        if (f == 0) continue;
        a.row(i) -= f * a.row(k);
        a.col(i) -= f * a.col(k);
      }
      ++k;
      continue;
    }

    // All remaining diagonal entries vanish.
    Eigen::Index row = k, partner = n;
    for (; row < n && partner == n; ++row) {
      for (Eigen::Index j = row + 1; j < n; ++j) {
        if (a(row, j) != 0) {
          partner = j;
          break;
        }
      }
      if (partner != n) break;
    }
    if (partner == n) {
      result.zero += static_cast<int>(n - k);
      break;
    }
    swap_index(k, row);
    swap_index(k + 1, partner);
    const Rational h = a(k, k + 1);
    for (Eigen::Index i = k + 2; i < n; ++i) {
      const Rational alpha = a(i, k + 1) / h;
      const Rational beta = a(i, k) / h;
      if (alpha != 0) {
        a.row(i) -= alpha * a.row(k);
        a.col(i) -= alpha * a.col(k);
      }
      if (beta != 0) {
        a.row(i) -= beta * a.row(k + 1);
        a.col(i) -= beta * a.col(k + 1);
      }
    }
    result.positive += 1;
    result.negative += 1;
    k += 2;
  }
  return result;
}

}  // namespace og6
