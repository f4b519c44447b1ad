#include "og6/elementary_genus.hpp"

#include "block_search.hpp"

#include <map>
#include <mutex>

namespace og6 {

namespace {

int mod8(int x) { return ((x % 8) + 8) % 8; }

bool exists_two_elementary(const ElementaryInvariants& inv) {
  const int r = inv.rank();
  const int s = inv.t_plus - inv.t_minus;
  const int a = inv.a;
  const int delta = inv.delta;
  if (r == 0) return a == 0 && delta == 0;
  if (a > r || (r - a) % 2 != 0) return false;
  if (delta == 0 && s % 4 != 0) return false;
  if (a == 0 && (delta != 0 || mod8(s) != 0)) return false;
  if (a == 1 && mod8(s) != 1 && mod8(s) != 7) return false;
  if (a == 2 && mod8(s) == 4 && delta != 0) return false;
  if (delta == 0 && a == r && mod8(s) != 0) return false;
  return true;
}

bool exists_odd_elementary(const ElementaryInvariants& inv) {
  const int p = inv.p;
  const int r = inv.rank();
  const int s = inv.t_plus - inv.t_minus;
  const int a = inv.a;
  if (r == 0) return a == 0 && inv.square_class == 1;
  if (a > r || r % 2 != 0) return false;
  if (a == 0 && inv.square_class != 1) return false;
  // 2-adically the lattice is even unimodular, which forces the determinant
  // class mod 4.
  const Integer det = (inv.t_minus % 2 ? Integer(-1) : Integer(1)) * pow(Integer(p), unsigned(a));
  const Integer expected = (r / 2) % 2 ? Integer(3) : Integer(1);
  if (mod(det, Integer(4)) != expected) return false;
  // With no unimodular part the p-scaled component carries the whole
  // determinant.
  if (a == r && inv.square_class != legendre(Integer(inv.t_minus % 2 ? -1 : 1), p)) {
    return false;
  }
  // Oddity formula: signature plus p-excess vanishes mod 8.
  const int antisquare = (a > 0 && inv.square_class == -1) ? 1 : 0;
  return mod8(s + a * (p - 1) + 4 * antisquare) == 0;
}

struct BlockInvariants {
  int a = 0;
  int delta = 0;
  int square_class = 1;
};

std::optional<Lattice> dual_scaled(const Lattice& l, int p) {
  const RatMatrix inv = l.gram().cast<Rational>().inverse() * Rational(p);
  IntMatrix g(inv.rows(), inv.cols());
  for (Eigen::Index i = 0; i < inv.rows(); ++i) {
    for (Eigen::Index j = 0; j < inv.cols(); ++j) {
      if (boost::multiprecision::denominator(inv(i, j)) != 1) return std::nullopt;
      g(i, j) = boost::multiprecision::numerator(inv(i, j));
    }
    if (g(i, i) % 2 != 0) return std::nullopt;
  }
  return Lattice(g, "dual(" + l.label() + ")(" + std::to_string(p) + ")");
}

std::vector<Lattice> witness_lattices(int p) {
  using NL = NamedLattice;
  std::vector<Lattice> ls = {make_named(NL::U), make_named(NL::E, 8),
                             twist(make_named(NL::E, 8), -1), make_named(NL::U, p),
                             twist(make_named(NL::E, 8), p), twist(make_named(NL::E, 8), -p)};
  if (p == 2) {
    ls.push_back(make_named(NL::Rank1, 2));
    ls.push_back(make_named(NL::Rank1, -2));
    for (long n : {4L, 6L, 8L}) {
      ls.push_back(make_named(NL::D, n));
      ls.push_back(twist(make_named(NL::D, n), -1));
    }
    ls.push_back(make_named(NL::E, 7));
    ls.push_back(twist(make_named(NL::E, 7), -1));
  } else {
    ls.push_back(make_named(NL::Rank1, 2 * p));
    ls.push_back(make_named(NL::Rank1, -2 * p));
    ls.push_back(make_named(NL::A, p - 1));
    ls.push_back(twist(make_named(NL::A, p - 1), -1));
    if (p == 3) {
      ls.push_back(make_named(NL::E, 6));
      ls.push_back(twist(make_named(NL::E, 6), -1));
    }
    if (p == 5) ls.push_back(make_named(NL::H5));
    if (p == 7) {
      ls.push_back(make_named(NL::K7));
      ls.push_back(twist(make_named(NL::K7), -1));
    }
  }
  // L^v(p) is p-elementary with a' = rank - a whenever it is even.
  const std::size_t base = ls.size();
  for (std::size_t i = 0; i < base; ++i) {
    if (auto d = dual_scaled(ls[i], p)) ls.push_back(*d);
  }
  return ls;
}

struct WitnessTable {
  std::vector<detail::Block> blocks;
  std::vector<BlockInvariants> invariants;
};

const WitnessTable& witness_table(int p) {
  static std::mutex lock;
  static std::map<int, WitnessTable> cache;
  const std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  WitnessTable t;
  for (const Lattice& l : witness_lattices(p)) {
    const FiniteQuadraticForm f = discriminant_form(l);
    if (!is_p_elementary(f, p)) continue;
    const ElementaryInvariants inv = elementary_invariants(f, signature(l), p);
    t.blocks.push_back(detail::make_block(l));
    t.invariants.push_back({inv.a, inv.delta, inv.square_class});
  }
  return cache.emplace(p, std::move(t)).first->second;
}

}  // namespace

bool exists_elementary(const ElementaryGenusQuery& q) {
  const ElementaryInvariants& inv = q.inv;
  if (inv.t_plus < 0 || inv.t_minus < 0 || inv.a < 0) return false;
  return inv.p == 2 ? exists_two_elementary(inv) : exists_odd_elementary(inv);
}

bool splits_off_U(const ElementaryGenusQuery& q) {
  if (q.inv.t_plus < 1 || q.inv.t_minus < 1) return false;
  ElementaryGenusQuery reduced = q;
  reduced.inv.t_plus -= 1;
  reduced.inv.t_minus -= 1;
  return exists_elementary(reduced);
}

std::optional<Lattice> construct_witness(const ElementaryGenusQuery& q, int max_rank) {
  if (max_rank > kMaxWitnessRank) {
    throw LatticeError("witness search supports rank <= " + std::to_string(kMaxWitnessRank));
  }
  const ElementaryInvariants& want = q.inv;
  if (want.rank() > max_rank) return std::nullopt;
  if (want.rank() == 0) {
    if (want.a == 0 && want.delta == 0 && want.square_class == 1) return Lattice();
    return std::nullopt;
  }
  const WitnessTable& table = witness_table(want.p);
  std::optional<Lattice> found;
  detail::search_block_sums(
      table.blocks, {want.t_plus, want.t_minus}, [&](const std::vector<std::size_t>& choice) {
        BlockInvariants sum;
        for (std::size_t i : choice) {
          sum.a += table.invariants[i].a;
          sum.delta = std::max(sum.delta, table.invariants[i].delta);
          sum.square_class *= table.invariants[i].square_class;
        }
        if (sum.a != want.a) return false;
        if (want.p == 2 ? sum.delta != want.delta : sum.square_class != want.square_class) {
          return false;
        }
        // Recompute from scratch; block invariants are only a filter.
        const Lattice l = detail::assemble(table.blocks, choice);
        if (!(elementary_invariants(l, want.p) == want)) return false;
        found = l;
        return true;
      });
  return found;
}

}  // namespace og6
