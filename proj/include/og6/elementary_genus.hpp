#pragma once

// Existence of even p-elementary lattices with given genus invariants, and
// the test for an orthogonal summand U.

#include "og6/finite_form.hpp"

#include <optional>

namespace og6 {

struct ElementaryGenusQuery {
  ElementaryInvariants inv;
};

/// True iff an even p-elementary lattice with these invariants exists.
bool exists_elementary(const ElementaryGenusQuery& q);

/// True iff every lattice in the genus is U + R with R even p-elementary of
/// signature (t+ - 1, t- - 1) and the same discriminant form.
bool splits_off_U(const ElementaryGenusQuery& q);

inline constexpr int kMaxWitnessRank = 10;

/// A sum of standard blocks realizing the invariants, or nothing. Throws
/// LatticeError for max_rank above kMaxWitnessRank.
std::optional<Lattice> construct_witness(const ElementaryGenusQuery& q, int max_rank = 8);

}  // namespace og6
