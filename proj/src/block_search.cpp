#include "block_search.hpp"

namespace og6::detail {

Block make_block(const Lattice& l) { return {l, signature(l), abs(determinant(l))}; }

namespace {

bool extend(const std::vector<Block>& blocks, Signature remaining, std::size_t first,
            std::vector<std::size_t>& choice,
            const std::function<bool(const std::vector<std::size_t>&)>& accept) {
  if (remaining.pos == 0 && remaining.neg == 0) return accept(choice);
  for (std::size_t i = first; i < blocks.size(); ++i) {
    const Signature s = blocks[i].sig;
    if (s.rank() == 0 || s.pos > remaining.pos || s.neg > remaining.neg) continue;
    choice.push_back(i);
    if (extend(blocks, {remaining.pos - s.pos, remaining.neg - s.neg}, i, choice, accept)) {
      return true;
    }
    choice.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> search_block_sums(
    const std::vector<Block>& blocks, Signature target,
    const std::function<bool(const std::vector<std::size_t>&)>& accept) {
  std::vector<std::size_t> choice;
  if (extend(blocks, target, 0, choice, accept)) return choice;
  return std::nullopt;
}

Lattice assemble(const std::vector<Block>& blocks, const std::vector<std::size_t>& choice) {
  std::vector<Lattice> parts;
  parts.reserve(choice.size());
  for (std::size_t i : choice) parts.push_back(blocks[i].lattice);
  return direct_sum(parts);
}

}  // namespace og6::detail
