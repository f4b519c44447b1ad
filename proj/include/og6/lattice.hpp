#pragma once

// Even nondegenerate integer lattices given by Gram matrices.

#include "og6/exact.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace og6 {

using LatticeVector = IntVector;

struct Signature {
  int pos = 0;
  int neg = 0;

  [[nodiscard]] int rank() const { return pos + neg; }
  friend bool operator==(const Signature&, const Signature&) = default;
  friend Signature operator+(Signature a, Signature b) {
    return {a.pos + b.pos, a.neg + b.neg};
  }
};

std::string to_string(const Signature& s);

/// An even nondegenerate lattice. The Gram matrix is validated on
/// construction and never changes afterwards.
class Lattice {
 public:
  Lattice() : gram_(0, 0) {}
  explicit Lattice(IntMatrix gram, std::string label = {});

  [[nodiscard]] const IntMatrix& gram() const { return gram_; }
  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] Eigen::Index rank() const { return gram_.rows(); }

  [[nodiscard]] Lattice with_label(std::string label) const;

 private:
  IntMatrix gram_;
  std::string label_;
};

/// Builds a lattice from a small row-major list of entries.
Lattice lattice_from_rows(std::initializer_list<std::initializer_list<long>> rows,
                          std::string label = {});

enum class NamedLattice {
  U,          // hyperbolic plane
  A,          // A_n, negative definite
  D,          // D_n, negative definite
  E,          // E_6, E_7, E_8, negative definite
  Rank1,      // [m]
  H5,         // indefinite rank 2, det -5
  K7,         // negative definite rank 2, det 7
  OG6,        // U^3 + [-2]^2
  Mukai,      // U^4
  Lambda10,   // U^5
};

/// Standard Gram matrices. `param` is n for A/D/E, m for [m], and an optional
/// twist for U (U(n)).
Lattice make_named(NamedLattice name, std::optional<long> param = std::nullopt);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice direct_sum(const std::vector<Lattice>& parts);
Lattice power(const Lattice& l, int k);

/// L(n): the same module with the form multiplied by n.
Lattice twist(const Lattice& l, long n);

Integer determinant(const Lattice& l);
Signature signature(const Lattice& l);

Integer inner(const Lattice& l, const LatticeVector& v, const LatticeVector& w);

/// gcd of the pairings of v with all of L.
Integer divisibility(const Lattice& l, const LatticeVector& v);

/// Calls `visit` for every nonzero v with coordinates in [-bound, bound] and
/// v^2 = norm, one representative per +-v pair (first nonzero coordinate
/// positive), in order of increasing max-coordinate. Stops early when
/// `visit` returns false.
void for_each_vector_of_norm(
    const Lattice& l, long norm, int bound,
    const std::function<bool(const LatticeVector&)>& visit);

inline constexpr int kDefaultSearchBound = 6;

std::vector<LatticeVector> vectors_of_norm(const Lattice& l, long norm,
                                           int bound = kDefaultSearchBound);

/// Gram matrix of the sublattice spanned by the rows of `basis`.
Lattice sublattice(const Lattice& l, const IntMatrix& basis, std::string label = {});

/// The primitive sublattice orthogonal to the rows of `vectors`.
Lattice orthogonal_complement(const Lattice& l, const IntMatrix& vectors,
                              IntMatrix* basis_out = nullptr);

LatticeVector unit_vector(Eigen::Index rank, Eigen::Index i);

std::string format_gram(const IntMatrix& gram);

}  // namespace og6
