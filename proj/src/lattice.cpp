#include "og6/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace og6 {

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + ")";
}

Lattice::Lattice(IntMatrix gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
  if (gram_.rows() != gram_.cols()) throw LatticeError("Gram matrix is not square");
  if (gram_ != gram_.transpose()) throw LatticeError("Gram matrix is not symmetric");
  for (Eigen::Index i = 0; i < gram_.rows(); ++i) {
    if (gram_(i, i) % 2 != 0) {
      throw LatticeError("lattice is not even: diagonal entry " +
                         gram_(i, i).str() + " is odd");
    }
  }
  if (bareiss_determinant(gram_) == 0) throw LatticeError("lattice is degenerate");
}

Lattice Lattice::with_label(std::string label) const {
  Lattice out = *this;
  out.label_ = std::move(label);
  return out;
}

Lattice lattice_from_rows(std::initializer_list<std::initializer_list<long>> rows,
                          std::string label) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix g(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) throw LatticeError("ragged Gram rows");
    Eigen::Index j = 0;
    for (long x : row) g(i, j++) = x;
    ++i;
  }
  return Lattice(std::move(g), std::move(label));
}

namespace {

IntMatrix cartan_a(long n) {
  IntMatrix g = IntMatrix::Zero(n, n);
  for (long i = 0; i < n; ++i) {
    g(i, i) = -2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = 1;
  }
  return g;
}

IntMatrix cartan_d(long n) {
  // Chain 0-1-...-(n-2) with node n-1 attached to node n-3.
  IntMatrix g = IntMatrix::Zero(n, n);
  for (long i = 0; i < n; ++i) g(i, i) = -2;
  for (long i = 0; i + 2 < n; ++i) g(i, i + 1) = g(i + 1, i) = 1;
  g(n - 3, n - 1) = g(n - 1, n - 3) = 1;
  return g;
}

IntMatrix cartan_e(long n) {
  // Chain 0-1-...-(n-2) with node n-1 attached to node 2.
  IntMatrix g = IntMatrix::Zero(n, n);
  for (long i = 0; i < n; ++i) g(i, i) = -2;
  for (long i = 0; i + 2 < n; ++i) g(i, i + 1) = g(i + 1, i) = 1;
  g(2, n - 1) = g(n - 1, 2) = 1;
  return g;
}

Lattice hyperbolic_plane() { return lattice_from_rows({{0, 1}, {1, 0}}, "U"); }

}  // namespace

Lattice make_named(NamedLattice name, std::optional<long> param) {
  switch (name) {
    case NamedLattice::U: {
      if (!param) return hyperbolic_plane();
      if (*param == 0) throw LatticeError("U(0) is degenerate");
      return twist(hyperbolic_plane(), *param).with_label("U(" + std::to_string(*param) + ")");
    }
    case NamedLattice::A: {
      if (!param || *param < 1) throw LatticeError("A(n) needs n >= 1");
      return Lattice(cartan_a(*param), "A(" + std::to_string(*param) + ")");
    }
    case NamedLattice::D: {
      if (!param || *param < 4) throw LatticeError("D(n) needs n >= 4");
      return Lattice(cartan_d(*param), "D(" + std::to_string(*param) + ")");
    }
    case NamedLattice::E: {
      if (!param || *param < 6 || *param > 8) throw LatticeError("E(n) needs n in {6,7,8}");
      return Lattice(cartan_e(*param), "E(" + std::to_string(*param) + ")");
    }
    case NamedLattice::Rank1: {
      if (!param) throw LatticeError("[m] needs m");
      if (*param % 2 != 0) throw LatticeError("[m] needs m even, got " + std::to_string(*param));
      if (*param == 0) throw LatticeError("[0] is degenerate");
      return lattice_from_rows({{*param}}, "[" + std::to_string(*param) + "]");
    }
    // Pinned by the enumeration in tests/test_named_lattices.cpp.
    case NamedLattice::H5:
      return lattice_from_rows({{-2, -3}, {-3, -2}}, "h5");
    case NamedLattice::K7:
      return lattice_from_rows({{-4, -3}, {-3, -4}}, "K7");
    case NamedLattice::OG6: {
      const Lattice m2 = make_named(NamedLattice::Rank1, -2);
      return direct_sum({hyperbolic_plane(), hyperbolic_plane(), hyperbolic_plane(), m2, m2})
          .with_label("OG6");
    }
    case NamedLattice::Mukai:
      return power(hyperbolic_plane(), 4).with_label("Mukai");
    case NamedLattice::Lambda10:
      return power(hyperbolic_plane(), 5).with_label("Lambda10");
  }
  throw LatticeError("unknown lattice name");
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const Eigen::Index ra = a.rank(), rb = b.rank();
  IntMatrix g = IntMatrix::Zero(ra + rb, ra + rb);
  g.topLeftCorner(ra, ra) = a.gram();
  g.bottomRightCorner(rb, rb) = b.gram();
  std::string label;
  if (a.rank() == 0) label = b.label();
  else if (b.rank() == 0) label = a.label();
  else if (!a.label().empty() && !b.label().empty()) label = a.label() + " + " + b.label();
  return Lattice(std::move(g), std::move(label));
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
  Lattice out;
  for (const Lattice& p : parts) out = direct_sum(out, p);
  return out;
}

Lattice power(const Lattice& l, int k) {
  if (k < 1) throw LatticeError("power needs k >= 1");
  Lattice out = l;
  for (int i = 1; i < k; ++i) out = direct_sum(out, l);
  if (!l.label().empty()) out = out.with_label("(" + l.label() + ")^" + std::to_string(k));
  return out;
}

Lattice twist(const Lattice& l, long n) {
  if (n == 0) throw LatticeError("twist by 0 is degenerate");
  IntMatrix g = l.gram() * Integer(n);
  std::string label;
  if (!l.label().empty()) label = "(" + l.label() + ")(" + std::to_string(n) + ")";
  return Lattice(std::move(g), std::move(label));
}

Integer determinant(const Lattice& l) { return bareiss_determinant(l.gram()); }

Signature signature(const Lattice& l) {
  const Inertia in = congruence_inertia(l.gram());
  if (in.zero != 0) throw LatticeError("degenerate Gram matrix");
  return {in.positive, in.negative};
}

Integer inner(const Lattice& l, const LatticeVector& v, const LatticeVector& w) {
  if (v.size() != l.rank() || w.size() != l.rank()) {
    throw LatticeError("vector length does not match lattice rank");
  }
  return v.dot(l.gram() * w);
}

Integer divisibility(const Lattice& l, const LatticeVector& v) {
  if (v.size() != l.rank()) throw LatticeError("vector length does not match lattice rank");
  if (v.isZero()) throw LatticeError("divisibility of the zero vector");
  const IntVector pairings = l.gram() * v;
  Integer g = 0;
  for (Eigen::Index i = 0; i < pairings.size(); ++i) g = gcd(g, pairings(i));
  return g;
}

namespace {
// Odometer step over [-b, b]^r; false once every coordinate has wrapped.
bool advance(std::vector<std::int64_t>& x, int b) {
  for (std::size_t k = x.size(); k-- > 0;) {
    if (x[k] < b) {
      ++x[k];
      return true;
    }
    x[k] = -b;
  }
  return false;
}
}  // namespace

void for_each_vector_of_norm(const Lattice& l, long norm, int bound,
                             const std::function<bool(const LatticeVector&)>& visit) {
  if (bound < 1) throw LatticeError("search bound must be >= 1");
  const auto r = static_cast<std::size_t>(l.rank());
  if (r == 0) return;
  std::vector<std::int64_t> g(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) g[i * r + j] = to_i64(l.gram()(i, j));
  }

  std::vector<std::int64_t> x(r);
  LatticeVector out(static_cast<Eigen::Index>(r));
  // Shell b holds the vectors whose largest coordinate is exactly b.
  for (int b = 1; b <= bound; ++b) {
    std::fill(x.begin(), x.end(), -b);
    for (;;) {
      std::int64_t maxabs = 0;
      std::size_t lead = r;
      for (std::size_t i = 0; i < r; ++i) {
        maxabs = std::max<std::int64_t>(maxabs, x[i] < 0 ? -x[i] : x[i]);
        if (lead == r && x[i] != 0) lead = i;
      }
      if (maxabs == b && x[lead] > 0) {
        std::int64_t q = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (x[i] == 0) continue;
          std::int64_t row = 0;
          for (std::size_t j = 0; j < r; ++j) row += g[i * r + j] * x[j];
          q += x[i] * row;
        }
        if (q == norm) {
          for (std::size_t i = 0; i < r; ++i) out(static_cast<Eigen::Index>(i)) = x[i];
          if (!visit(out)) return;
        }
      }
      if (!advance(x, b)) break;
    }
  }
}

std::vector<LatticeVector> vectors_of_norm(const Lattice& l, long norm, int bound) {
  std::vector<LatticeVector> out;
  for_each_vector_of_norm(l, norm, bound, [&](const LatticeVector& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

Lattice sublattice(const Lattice& l, const IntMatrix& basis, std::string label) {
  return Lattice(basis * l.gram() * basis.transpose(), std::move(label));
}

Lattice orthogonal_complement(const Lattice& l, const IntMatrix& vectors,
                              IntMatrix* basis_out) {
  const IntMatrix pairing = vectors * l.gram();
  const IntMatrix kernel = integer_kernel(pairing);  // columns
  const IntMatrix basis = kernel.transpose();
  if (basis_out) *basis_out = basis;
  return sublattice(l, basis);
}

LatticeVector unit_vector(Eigen::Index rank, Eigen::Index i) {
  LatticeVector v = LatticeVector::Zero(rank);
  v(i) = 1;
  return v;
}

std::string format_gram(const IntMatrix& gram) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
      if (j) os << ", ";
      os << gram(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace og6
