// The rank-2 lattices h5 and K7 are fixed by an enumeration: the
// lexicographically smallest even 2x2 Gram matrix with the required
// signature and determinant whose gluing into the OG6 lattice is possible
// for the corresponding classification row.

#include "og6/embedding.hpp"
#include "og6/expr.hpp"

#include <gtest/gtest.h>

namespace og6 {
namespace {

std::optional<IntMatrix> smallest_rank2(Signature sig, long det, const std::string& partner,
                                        const std::string& complement) {
  const FiniteQuadraticForm og6 = discriminant_form(make_named(NamedLattice::OG6));
  const Lattice n = lattice_from_expression(complement);
  for (long a = -4; a <= 4; a += 2) {
    for (long b = -4; b <= 4; ++b) {
      for (long c = -4; c <= 4; c += 2) {
        if (a * c - b * b != det) continue;
        const Lattice k = lattice_from_rows({{a, b}, {b, c}});
        if (signature(k) != sig) continue;
        const Lattice m = direct_sum(lattice_from_expression(partner), k);
        if (!enumerate_gluings(m, n, og6).empty()) return k.gram();
      }
    }
  }
  return std::nullopt;
}

TEST(NamedLattices, H5IsPinnedByEnumeration) {
  const auto oracle = smallest_rank2({1, 1}, -5, "U", "[-2] + [-10] + U");
  ASSERT_TRUE(oracle.has_value());
  EXPECT_EQ(make_named(NamedLattice::H5).gram(), *oracle);
  // Frozen value.
  EXPECT_EQ(format_gram(make_named(NamedLattice::H5).gram()), "[[-2, -3], [-3, -2]]");
}

TEST(NamedLattices, K7IsPinnedByEnumeration) {
  const auto oracle = smallest_rank2({0, 2}, 7, "U^2", "[-2] + [14]");
  ASSERT_TRUE(oracle.has_value());
  EXPECT_EQ(make_named(NamedLattice::K7).gram(), *oracle);
  EXPECT_EQ(format_gram(make_named(NamedLattice::K7).gram()), "[[-4, -3], [-3, -4]]");
}

TEST(NamedLattices, Invariants) {
  const Lattice h5 = make_named(NamedLattice::H5);
  EXPECT_EQ(determinant(h5), -5);
  EXPECT_EQ(signature(h5), (Signature{1, 1}));
  const Lattice k7 = make_named(NamedLattice::K7);
  EXPECT_EQ(determinant(k7), 7);
  EXPECT_EQ(signature(k7), (Signature{0, 2}));
}

TEST(NamedLattices, RootLatticeDeterminants) {
  for (long n = 1; n <= 8; ++n) {
    EXPECT_EQ(abs(determinant(make_named(NamedLattice::A, n))), n + 1);
    EXPECT_EQ(signature(make_named(NamedLattice::A, n)), (Signature{0, int(n)}));
  }
  for (long n = 4; n <= 8; ++n) EXPECT_EQ(abs(determinant(make_named(NamedLattice::D, n))), 4);
  EXPECT_EQ(abs(determinant(make_named(NamedLattice::E, 6))), 3);
  EXPECT_EQ(abs(determinant(make_named(NamedLattice::E, 7))), 2);
  EXPECT_EQ(abs(determinant(make_named(NamedLattice::E, 8))), 1);
  EXPECT_THROW(make_named(NamedLattice::E, 9), LatticeError);
  EXPECT_THROW(make_named(NamedLattice::A, 0), LatticeError);
}

TEST(NamedLattices, MukaiAndLambda10AreUnimodular) {
  EXPECT_EQ(determinant(make_named(NamedLattice::Mukai)), 1);
  EXPECT_EQ(signature(make_named(NamedLattice::Mukai)), (Signature{4, 4}));
  EXPECT_EQ(abs(determinant(make_named(NamedLattice::Lambda10))), 1);
  EXPECT_EQ(signature(make_named(NamedLattice::Lambda10)), (Signature{5, 5}));
}

}  // namespace
}  // namespace og6
