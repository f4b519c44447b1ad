#include "og6/lattice.hpp"

#include "support/corpus.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace og6 {
namespace {

using testing::Rng;
using testing::uniform;

LatticeVector vec(std::initializer_list<long> xs) {
  LatticeVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

const Lattice kU = make_named(NamedLattice::U);
const Lattice kOG6 = make_named(NamedLattice::OG6);

TEST(Lattice, RejectsBadGram) {
  EXPECT_THROW(lattice_from_rows({{0, 1}, {2, 0}}), LatticeError);
  EXPECT_THROW(lattice_from_rows({{1}}), LatticeError);
  EXPECT_THROW(lattice_from_rows({{2, 2}, {2, 2}}), LatticeError);
  EXPECT_THROW(Lattice(IntMatrix(2, 3)), LatticeError);
}

TEST(Lattice, NamedExamples) {
  EXPECT_EQ(kU.gram(), lattice_from_rows({{0, 1}, {1, 0}}).gram());
  IntMatrix og6 = IntMatrix::Zero(8, 8);
  for (Eigen::Index i = 0; i < 6; i += 2) og6(i, i + 1) = og6(i + 1, i) = 1;
  og6(6, 6) = og6(7, 7) = -2;
  EXPECT_EQ(kOG6.gram(), og6);
}

TEST(Lattice, DirectSumExamples) {
  EXPECT_EQ(kOG6.rank(), 8);
  EXPECT_EQ(determinant(direct_sum(kU, kU)), 1);
  EXPECT_EQ(abs(determinant(kOG6)), 4);
  const Lattice s = direct_sum(make_named(NamedLattice::Rank1, 2), make_named(NamedLattice::Rank1, -2));
  EXPECT_EQ(s.gram(), lattice_from_rows({{2, 0}, {0, -2}}).gram());
  EXPECT_EQ(determinant(s), -4);
}

TEST(Lattice, TwistExamples) {
  EXPECT_EQ(twist(kU, 2).gram(), lattice_from_rows({{0, 2}, {2, 0}}).gram());
  EXPECT_EQ(twist(make_named(NamedLattice::Rank1, -2), -1).gram(), lattice_from_rows({{2}}).gram());
  const Lattice a2 = twist(make_named(NamedLattice::A, 2), -1);
  EXPECT_EQ(determinant(a2), 3);
  EXPECT_EQ(signature(a2), (Signature{2, 0}));
  EXPECT_THROW(twist(kU, 0), LatticeError);
}

TEST(Lattice, DeterminantAndSignatureExamples) {
  EXPECT_EQ(determinant(kU), -1);
  EXPECT_EQ(determinant(kOG6), -4);
  EXPECT_EQ(determinant(make_named(NamedLattice::A, 2)), 3);
  EXPECT_EQ(signature(kU), (Signature{1, 1}));
  EXPECT_EQ(signature(kOG6), (Signature{3, 5}));
  EXPECT_EQ(signature(direct_sum(kU, make_named(NamedLattice::H5))), (Signature{2, 2}));
}

TEST(Lattice, InnerAndDivisibilityExamples) {
  EXPECT_EQ(inner(kU, vec({1, 0}), vec({0, 1})), 1);
  EXPECT_EQ(inner(make_named(NamedLattice::Rank1, -2), vec({1}), vec({1})), -2);
  LatticeVector s1 = unit_vector(8, 6), s2 = unit_vector(8, 7);
  EXPECT_EQ(inner(kOG6, s1 + s2, s1 + s2), -4);
  EXPECT_EQ(divisibility(kOG6, s1), 2);
  EXPECT_EQ(divisibility(kU, vec({1, -1})), 1);
  EXPECT_EQ(divisibility(twist(kU, 2), vec({1, 0})), 2);
  EXPECT_THROW(divisibility(kU, vec({0, 0})), LatticeError);
}

TEST(Lattice, VectorsOfNormExamples) {
  EXPECT_EQ(vectors_of_norm(make_named(NamedLattice::Rank1, -2), -2, 1),
            (std::vector<LatticeVector>{vec({1})}));
  // Isotropic vectors of U in [-1,1]^2, one per sign pair.
  const auto iso = vectors_of_norm(kU, 0, 1);
  EXPECT_EQ(iso.size(), 2u);
  // Norm -2 in U within [-2,2]^2: 2xy = -2.
  const auto m2 = vectors_of_norm(kU, -2, 2);
  std::set<std::pair<long, long>> got;
  for (const auto& v : m2) got.insert({long(v(0)), long(v(1))});
  EXPECT_EQ(got, (std::set<std::pair<long, long>>{{1, -1}}));
}

// Naive scan of the whole box, normalized the same way.
std::vector<LatticeVector> naive_vectors_of_norm(const Lattice& l, long norm, int bound) {
  std::vector<LatticeVector> out;
  const Eigen::Index r = l.rank();
  std::vector<long> x(static_cast<std::size_t>(r), -bound);
  for (;;) {
    LatticeVector v(r);
    for (Eigen::Index i = 0; i < r; ++i) v(i) = x[static_cast<std::size_t>(i)];
    Eigen::Index first = 0;
    while (first < r && v(first) == 0) ++first;
    if (first < r && v(first) > 0 && inner(l, v, v) == norm) out.push_back(v);
    std::size_t k = 0;
    while (k < x.size() && x[k] == bound) x[k++] = -bound;
    if (k == x.size()) break;
    ++x[k];
  }
  return out;
}

TEST(Lattice, VectorsOfNormMatchesNaiveScan) {
  Rng rng(21);
  auto key = [](const LatticeVector& v) {
    std::vector<long> out;
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(long(v(i)));
    return out;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const Lattice l = testing::random_lattice(rng, 1, 4);
    const long norm = 2 * uniform(rng, -2, 1);
    std::set<std::vector<long>> fast, slow;
    for (const auto& v : vectors_of_norm(l, norm, 2)) EXPECT_TRUE(fast.insert(key(v)).second);
    for (const auto& v : naive_vectors_of_norm(l, norm, 2)) slow.insert(key(v));
    EXPECT_EQ(fast, slow) << format_gram(l.gram()) << " norm " << norm;
  }
}

TEST(Lattice, VectorsOfNormOrderedByMaxCoordinate) {
  const auto v = vectors_of_norm(make_named(NamedLattice::OG6), -2, 3);
  long last = 0;
  for (const auto& x : v) {
    long m = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i) m = std::max(m, long(abs(x(i))));
    EXPECT_GE(m, last);
    last = m;
  }
}

TEST(LatticeProperties, DeterminantIsMultiplicative) {
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const Lattice a = testing::random_lattice(rng, 1, 4);
    const Lattice b = testing::random_lattice(rng, 1, 4);
    EXPECT_EQ(determinant(direct_sum(a, b)), determinant(a) * determinant(b));
  }
}

TEST(LatticeProperties, NegationSwapsSignature) {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Lattice l = testing::random_lattice(rng, 1, 6);
    const Signature s = signature(l);
    EXPECT_EQ(signature(twist(l, -1)), (Signature{s.neg, s.pos}));
  }
}

TEST(LatticeProperties, DivisibilityDividesNormAndScales) {
  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const Lattice l = testing::random_lattice(rng, 1, 6);
    LatticeVector v = testing::random_vector(rng, l.rank(), 3);
    if (v.isZero()) continue;
    const Integer d = divisibility(l, v);
    EXPECT_EQ(inner(l, v, v) % d, 0);
    const long k = uniform(rng, 1, 4) * (uniform(rng, 0, 1) ? 1 : -1);
    EXPECT_EQ(divisibility(l, LatticeVector(v * Integer(k))), Integer(std::labs(k)) * d);
  }
}

TEST(LatticeProperties, OrthogonalComplementIsPrimitiveAndOrthogonal) {
  Rng rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const Lattice l = testing::random_lattice(rng, 3, 6);
    LatticeVector v = testing::random_vector(rng, l.rank(), 2);
    if (v.isZero() || inner(l, v, v) == 0) continue;
    IntMatrix basis;
    const Lattice c = orthogonal_complement(l, IntMatrix(v.transpose()), &basis);
    EXPECT_EQ(c.rank(), l.rank() - 1);
    EXPECT_TRUE((basis * l.gram() * v).isZero());
    for (const Integer& f : smith(basis).invariant_factors()) EXPECT_EQ(f, 1);
  }
}

}  // namespace
}  // namespace og6
