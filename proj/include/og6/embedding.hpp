#pragma once

// Primitive embeddings M, N -> L with M and N mutually orthogonal, described
// by finite gluing data between the discriminant forms.

#include "og6/finite_form.hpp"

#include <optional>

namespace og6 {

/// A subgroup H of M^# together with an isometry gamma: H -> N(-1)^#.
/// Elements of N(-1)^# are stored as elements of N^# (same group), so
/// q_N(gamma x) = -q_M(x).
struct GluingData {
  std::vector<FiniteQuadraticForm::Element> m_gens;
  std::vector<FiniteQuadraticForm::Element> n_gens;
  std::int64_t h = 1;
};

struct EmbeddingCertificate {
  Lattice m;
  Lattice n;
  FiniteQuadraticForm ambient_disc;
  GluingData gluing;
};

enum class Decision { No, Yes, Undecided };

std::string to_string(Decision d);

/// All subgroups of the given order, each as a sorted list of element
/// indices. Throws BruteForceLimit above the cutoff.
std::vector<std::vector<std::int64_t>> subgroups_of_order(const FiniteQuadraticForm& f,
                                                          std::int64_t order);

/// Gluings of M and N whose overlattice has discriminant form isometric to
/// `ambient_disc`. Empty when the square relation has no integral solution.
std::vector<GluingData> enumerate_gluings(const Lattice& m, const Lattice& n,
                                          const FiniteQuadraticForm& ambient_disc);

/// Gamma^perp / Gamma inside M^# + N^#, where Gamma is the graph of gamma.
Subquotient gamma_perp_quotient(const FiniteQuadraticForm& m_disc,
                                const FiniteQuadraticForm& n_disc, const GluingData& g);

/// Checks the square relation and L^# = Gamma^perp / Gamma.
bool verify_certificate(const EmbeddingCertificate& c);

/// (v, L) for v in M, computed from the gluing: the largest d dividing
/// (v, M) such that the class of v/d is orthogonal to H.
Integer divisibility_in_ambient(const Lattice& m, const LatticeVector& v, const GluingData& g);
Integer divisibility_in_ambient(const Discriminant& m_disc, const Lattice& m,
                                const LatticeVector& v, const GluingData& g);

/// |det N| = |ambient_det * det M|; then H = M^# and (v, L) = 1 on all of M.
bool div_one_shortcut(const Lattice& m, const Lattice& n, const Integer& ambient_det);

/// The discriminant form of any complement of M in an even unimodular
/// lattice.
FiniteQuadraticForm unimodular_complement_disc(const Lattice& m);

/// A complement found by the block search, if any.
struct UnimodularEmbedding {
  Decision decision = Decision::Undecided;
  std::optional<Lattice> complement;
  std::string reason;
};

/// Primitive embedding of M into an even unimodular lattice of signature
/// `target`. Yes from the rank/length sufficient condition or an explicit
/// complement; No on signature or length obstructions; otherwise Undecided.
/// Throws LatticeError when pos - neg is not divisible by 8.
UnimodularEmbedding embedding_exists_in_unimodular(const Lattice& m, Signature target);

}  // namespace og6
