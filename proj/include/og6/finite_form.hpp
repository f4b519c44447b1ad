#pragma once

// Finite quadratic forms: discriminant groups L^v/L with their Q/2Z-valued
// quadratic form and Q/Z-valued bilinear form, plus genus invariants.

#include "og6/lattice.hpp"

#include <cstdint>
#include <vector>

namespace og6 {

/// Largest group order handled by exhaustive searches.
inline constexpr std::int64_t kBruteForceCutoff = 256;

/// A finite abelian group presented as a product of cyclic factors Z/n_i,
/// with a quadratic form q: G -> Q/2Z and its bilinear form b: G x G -> Q/Z.
///
/// Values are stored scaled by the level (the lcm of the factor orders), so
/// q is kept as an integer mod 2*level and b as an integer mod level. The
/// public accessors return reduced fractions in [0,2) and [0,1).
class FiniteQuadraticForm {
 public:
  using Element = std::vector<std::int64_t>;

  /// The trivial form.
  FiniteQuadraticForm() = default;

  /// Builds a form from generator data. Factors of order 1 are dropped.
  /// Throws LatticeError if the data is inconsistent (for instance if
  /// n_i * b(g_i, .) is not integral).
  FiniteQuadraticForm(std::vector<std::int64_t> orders, const std::vector<Rational>& q,
                      const RatMatrix& b);

  [[nodiscard]] const std::vector<std::int64_t>& orders() const { return orders_; }
  [[nodiscard]] std::size_t generator_count() const { return orders_.size(); }
  [[nodiscard]] std::int64_t order() const;
  [[nodiscard]] std::int64_t level() const { return level_; }

  [[nodiscard]] Rational q(std::size_t i) const;
  [[nodiscard]] Rational b(std::size_t i, std::size_t j) const;
  [[nodiscard]] Rational q(const Element& x) const;
  [[nodiscard]] Rational b(const Element& x, const Element& y) const;

  /// q(x) * level, reduced mod 2*level.
  [[nodiscard]] std::int64_t q_scaled(const Element& x) const;
  /// b(x, y) * level, reduced mod level.
  [[nodiscard]] std::int64_t b_scaled(const Element& x, const Element& y) const;

  [[nodiscard]] Element zero() const { return Element(orders_.size(), 0); }
  [[nodiscard]] Element generator(std::size_t i) const;
  [[nodiscard]] Element add(const Element& x, const Element& y) const;
  [[nodiscard]] Element scale(const Element& x, std::int64_t k) const;
  [[nodiscard]] Element reduce(Element x) const;
  [[nodiscard]] std::int64_t element_order(const Element& x) const;

  /// Mixed-radix enumeration of the group.
  [[nodiscard]] std::int64_t index_of(const Element& x) const;
  [[nodiscard]] Element element_at(std::int64_t index) const;

  /// The same group with q and b negated (the discriminant form of L(-1)).
  [[nodiscard]] FiniteQuadraticForm negated() const;

 private:
  std::vector<std::int64_t> orders_;
  std::int64_t level_ = 1;
  std::vector<std::int64_t> q_;  // scaled by level, mod 2*level
  std::vector<std::int64_t> b_;  // scaled by level, mod level, row-major
};

/// Discriminant form of a lattice together with the data needed to move
/// between L^v and L^#.
struct Discriminant {
  FiniteQuadraticForm form;
  /// Column i times 1/orders[i] is a representative in L^v of generator i
  /// (coordinates in the lattice basis).
  IntMatrix generator_numerators;
  /// Rows of the inverse Smith column transform, one per generator.
  IntMatrix coordinate_rows;

  /// Class in L^# of x in L^v (coordinates in the lattice basis).
  [[nodiscard]] FiniteQuadraticForm::Element class_of(const RatVector& x) const;
  /// A representative in L^v of a class.
  [[nodiscard]] RatVector lift(const FiniteQuadraticForm::Element& c) const;
};

Discriminant discriminant(const Lattice& l);
FiniteQuadraticForm discriminant_form(const Lattice& l);

/// Orthogonal direct sum; generators of f come first.
FiniteQuadraticForm orthogonal_sum(const FiniteQuadraticForm& f, const FiniteQuadraticForm& g);

/// A subquotient S/I of a finite form, rewritten on invariant-factor
/// generators. `subgroup` and `isotropic` are index lists (see index_of);
/// `isotropic` must be an isotropic subgroup of `subgroup` orthogonal to it.
struct Subquotient {
  FiniteQuadraticForm form;
  /// Representatives in the ambient form of the new generators.
  std::vector<FiniteQuadraticForm::Element> generators;
};

Subquotient subquotient(const FiniteQuadraticForm& ambient,
                        const std::vector<std::int64_t>& subgroup,
                        const std::vector<std::int64_t>& isotropic);

/// The same form on invariant-factor generators (orders form a divisibility
/// chain).
FiniteQuadraticForm normal_form(const FiniteQuadraticForm& f);

/// Minimal number of generators.
std::size_t length(const FiniteQuadraticForm& f);

/// True iff every invariant factor equals p. The trivial group counts as
/// p-elementary for every p.
bool is_p_elementary(const FiniteQuadraticForm& f, int p);

/// 0 iff q takes values in Z/2Z on the whole group. Requires a
/// 2-elementary form.
int delta_invariant(const FiniteQuadraticForm& f);

/// Exhaustive isometry test. Throws BruteForceLimit above kBruteForceCutoff.
bool forms_isometric(const FiniteQuadraticForm& f, const FiniteQuadraticForm& g);

/// Same signature and isometric discriminant forms.
bool same_genus(const Lattice& a, const Lattice& b);

/// True iff q(x+y) - q(x) - q(y) = 2 b(x,y) mod 2 for all pairs of
/// elements (checked exhaustively up to the brute-force cutoff).
bool satisfies_polarization(const FiniteQuadraticForm& f);

/// Genus invariants of a p-elementary even lattice. For p = 2 `delta` is
/// meaningful; for odd p `square_class` carries the Legendre symbol of the
/// determinant of the p-scaled Jordan component (+1 when a = 0).
struct ElementaryInvariants {
  int p = 2;
  int t_plus = 0;
  int t_minus = 0;
  int a = 0;
  int delta = 0;
  int square_class = 1;

  [[nodiscard]] int rank() const { return t_plus + t_minus; }
  friend bool operator==(const ElementaryInvariants&, const ElementaryInvariants&) = default;
};

std::string to_string(const ElementaryInvariants& inv);

/// Invariants of a p-elementary form placed on a lattice of signature s.
ElementaryInvariants elementary_invariants(const FiniteQuadraticForm& f, Signature s, int p);
ElementaryInvariants elementary_invariants(const Lattice& l, int p);

/// Legendre symbol (x/p) for an odd prime p.
int legendre(const Integer& x, int p);

}  // namespace og6
