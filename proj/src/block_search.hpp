#pragma once

// Search over orthogonal sums of small named lattices with a prescribed
// signature. Shared by the complement search and the genus witness oracle.

#include "og6/lattice.hpp"

#include <functional>

namespace og6::detail {

struct Block {
  Lattice lattice;
  Signature sig;
  Integer abs_det;
};

Block make_block(const Lattice& l);

/// Visits every multiset of blocks (as nondecreasing index lists, in
/// lexicographic order) with total signature `target`, stopping at the first
/// one `accept` returns true for.
std::optional<std::vector<std::size_t>> search_block_sums(
    const std::vector<Block>& blocks, Signature target,
    const std::function<bool(const std::vector<std::size_t>&)>& accept);

Lattice assemble(const std::vector<Block>& blocks, const std::vector<std::size_t>& choice);

}  // namespace og6::detail
