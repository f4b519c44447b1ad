#pragma once

// Lattice-theoretic tests for prime-order nonsymplectic actions on the OG6
// lattice: numerical moduli space, induced, and induced at the quotient.

#include "og6/elementary_genus.hpp"
#include "og6/embedding.hpp"

#include <array>
#include <filesystem>

namespace og6 {

struct ClassificationRow {
  int index = 0;
  int order = 2;
  std::string coinvariant_expr;  // L_G
  std::string invariant_expr;    // L^G
  Lattice coinvariant;
  Lattice invariant;
  bool expected_induced = false;
  bool expected_quotient = false;
  std::string note;
};

/// Builds a row from expressions and checks the rank, signature and
/// divisibility constraints. Throws LatticeError (ParseError for bad
/// expressions).
ClassificationRow make_row(int index, int order, const std::string& coinvariant,
                           const std::string& invariant, bool expected_induced = false,
                           bool expected_quotient = false, std::string note = {});

/// Reads "index; p; L_G; L^G; induced; quotient" records. Blank lines and
/// text after '#' are ignored; a comment on a record line becomes its note.
std::vector<ClassificationRow> load_table(const std::filesystem::path& path);
std::vector<ClassificationRow> load_table(std::istream& in, const std::string& source = "<input>");

struct Evidence {
  std::string rule;
  std::string detail;
};

struct SigmaResult {
  Decision decision = Decision::Undecided;
  // determinant-shortcut, kernel-screen, no-gluing, discriminant-screen,
  // witness, bounded-search
  std::string rule;
  std::string detail;
  std::optional<LatticeVector> witness;
  std::optional<GluingData> gluing;
  std::size_t gluing_count = 0;
};

struct Verdict {
  bool nms = false;
  bool induced = false;
  bool quotient = false;
  /// Set when the bounded witness search neither found nor excluded sigma.
  bool undecided = false;
  std::vector<Evidence> evidence;
};

/// r, l, s with the pairing l1.l2 - r1 s2 - r2 s1; l lives in `ns`.
struct MukaiVector {
  Integer r = 0;
  LatticeVector l;
  Integer s = 0;
};

Integer mukai_pairing(const Lattice& ns, const MukaiVector& a, const MukaiVector& b);

/// v != 0, v^2 >= 2, and r > 0, or r = 0 with l != 0, or r = l = 0 with s > 0.
bool is_positive_mukai_vector(const Lattice& ns, const MukaiVector& v);

/// sign(NS) + (1, -1). Throws LatticeError when ns.neg = 0.
Signature lambda11_signature(Signature ns);

/// Invariants of the (1,1)-part of the Mukai lattice, the complement of L_G
/// in U^4 with the sigma correction applied to the signature.
ElementaryGenusQuery lambda11_invariants(const ClassificationRow& row);

/// Is there v in L^G with v^2 = -2 and (v, L) = 2 for some gluing of L^G and
/// L_G into the OG6 lattice? No-answers come only from proofs: the
/// determinant shortcut, the mod-2 kernel screen, an empty gluing list, or
/// the discriminant screen. The bounded search can only answer yes.
SigmaResult sigma_class_exists(const ClassificationRow& row, int bound = kDefaultSearchBound);

/// True iff some c in {0,1}^r with G c = 0 mod 2 has c^T G c = 2 mod 4.
bool kernel_screen_allows(const Lattice& l);

/// Necessary condition for v in M with v^2 = -2 and (v, L) = 2 under the
/// gluing g: the class of v/2 has order <= 2, is orthogonal to H, and has
/// q = 3/2. `f` is the discriminant form of M.
bool half_class_exists(const FiniteQuadraticForm& f, const GluingData& g);

Verdict is_numerical_moduli_space(const ClassificationRow& row,
                                  int bound = kDefaultSearchBound);

/// Determinant of a prime-order isometry with coinvariant lattice of the
/// given rank.
int determinant_of_action(int p, int coinvariant_rank);

Verdict classify_row(const ClassificationRow& row, int bound = kDefaultSearchBound);

struct TableResult {
  ClassificationRow row;
  Verdict verdict;
  bool match = false;
};

std::vector<TableResult> classify_table(const std::vector<ClassificationRow>& rows,
                                        int bound = kDefaultSearchBound);

/// Integer matrices [[a, b], [c, d]] (f*H1 = a H1 + b H2, f*H2 = c H1 + d H2)
/// with entries in [-box, box] preserving the intersection ring of the
/// incidence variety and the nonnegativity of degrees on fibre lines.
std::vector<std::array<std::array<int, 2>, 2>> picard_incidence_actions(int box = 3);

/// The orthogonal complement of sigma in l. Requires sigma^2 = -2 and
/// (sigma, l) = 2.
Lattice sigma_complement(const Lattice& l, const LatticeVector& sigma);

/// The built-in corpus location (set at build time).
std::filesystem::path default_table_path();

}  // namespace og6
