#include "og6/exact.hpp"

#include <algorithm>

namespace og6 {

std::string to_string(const Rational& x) {
  const Integer den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  const Eigen::Index k = std::min(d.rows(), d.cols());
  out.reserve(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

// Row and column operations are mirrored into u and v so that u*m*v = d
// holds after every step.
struct SmithWork {
  IntMatrix a, u, v;

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    u.row(i).swap(u.row(j));
  }
  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    v.col(i).swap(v.col(j));
  }
  // row_i += f * row_j
  void add_row(Eigen::Index i, Eigen::Index j, const Integer& f) {
    if (f == 0) return;
    a.row(i) += f * a.row(j);
    u.row(i) += f * u.row(j);
  }
  void add_col(Eigen::Index i, Eigen::Index j, const Integer& f) {
    if (f == 0) return;
    a.col(i) += f * a.col(j);
    v.col(i) += f * v.col(j);
  }
  void negate_row(Eigen::Index i) {
    a.row(i) = -a.row(i);
    u.row(i) = -u.row(i);
  }

  // Moves the nonzero entry of least absolute value in the trailing block
  // to (k, k). Returns false if the block is zero.
  bool place_pivot(Eigen::Index k) {
    Eigen::Index bi = -1, bj = -1;
    Integer best = 0;
    for (Eigen::Index i = k; i < a.rows(); ++i) {
      for (Eigen::Index j = k; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        const Integer m = abs(a(i, j));
        if (bi < 0 || m < best) {
          best = m;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) return false;
    swap_rows(k, bi);
    swap_cols(k, bj);
    return true;
  }
};

}  // namespace

SmithDecomposition smith(const IntMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SmithWork w{m, IntMatrix::Identity(rows, rows), IntMatrix::Identity(cols, cols)};
  const Eigen::Index steps = std::min(rows, cols);

  for (Eigen::Index k = 0; k < steps; ++k) {
    if (!w.place_pivot(k)) break;
    for (;;) {
      bool clean = true;
      for (Eigen::Index i = k + 1; i < rows; ++i) {
        if (w.a(i, k) == 0) continue;
        w.add_row(i, k, -(w.a(i, k) / w.a(k, k)));
        if (w.a(i, k) != 0) clean = false;
      }
      for (Eigen::Index j = k + 1; j < cols; ++j) {
        if (w.a(k, j) == 0) continue;
        w.add_col(j, k, -(w.a(k, j) / w.a(k, k)));
        if (w.a(k, j) != 0) clean = false;
      }
      if (!clean) {
        w.place_pivot(k);
        continue;
      }
      // Pivot must divide the whole trailing block.
      Eigen::Index bad_row = -1;
      for (Eigen::Index i = k + 1; i < rows && bad_row < 0; ++i) {
        for (Eigen::Index j = k + 1; j < cols; ++j) {
          if (w.a(i, j) % w.a(k, k) != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      w.add_row(k, bad_row, Integer(1));
    }
    if (w.a(k, k) < 0) w.negate_row(k);
  }
  return SmithDecomposition{std::move(w.a), std::move(w.u), std::move(w.v)};
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw LatticeError("inverse of a non-square matrix");
  // Gauss-Jordan over Q; the result is integral because |det m| = 1.
  RatMatrix a = m.cast<Rational>();
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw LatticeError("matrix is singular");
    a.row(k).swap(a.row(p));
    inv.row(k).swap(inv.row(p));
    const Rational pivot = a(k, k);
    a.row(k) /= pivot;
    inv.row(k) /= pivot;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      a.row(i) -= f * a.row(k);
      inv.row(i) -= f * inv.row(k);
    }
  }
  IntMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (boost::multiprecision::denominator(inv(i, j)) != 1) {
        throw LatticeError("matrix is not unimodular");
      }
      out(i, j) = boost::multiprecision::numerator(inv(i, j));
    }
  }
  return out;
}

namespace {
Eigen::Index smith_rank(const SmithDecomposition& s) {
  Eigen::Index r = 0;
  const Eigen::Index k = std::min(s.d.rows(), s.d.cols());
  while (r < k && s.d(r, r) != 0) ++r;
  return r;
}
}  // namespace

IntMatrix integer_kernel(const IntMatrix& m) {
  // m v = u^{-1} d, so the kernel is spanned by the columns of v past the rank.
  const SmithDecomposition s = smith(m);
  const Eigen::Index r = smith_rank(s);
  return s.v.rightCols(m.cols() - r);
}

IntMatrix saturated_row_space(const IntMatrix& m) {
  // Rows of m span the same Q-space as the first r rows of v^{-1}, and those
  // rows extend to a basis of Z^n.
  const SmithDecomposition s = smith(m);
  const Eigen::Index r = smith_rank(s);
  return unimodular_inverse(s.v).topRows(r);
}

IntMatrix row_space_basis(const IntMatrix& m) {
  const SmithDecomposition s = smith(m);
  const Eigen::Index r = smith_rank(s);
  IntMatrix basis = s.d.topRows(r) * unimodular_inverse(s.v);
  return basis;
}

}  // namespace og6
