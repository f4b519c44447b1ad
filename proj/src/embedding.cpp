#include "og6/embedding.hpp"

#include "block_search.hpp"

#include <algorithm>
#include <set>

namespace og6 {

using Element = FiniteQuadraticForm::Element;

std::string to_string(Decision d) {
  switch (d) {
    case Decision::No: return "no";
    case Decision::Yes: return "yes";
    case Decision::Undecided: return "undecided";
  }
  return "undecided";
}

namespace {

void check_cutoff(const FiniteQuadraticForm& f, const char* what) {
  if (f.order() > kBruteForceCutoff) {
    throw BruteForceLimit(std::string("undecided-by-brute-force: ") + what + " has order " +
                          std::to_string(f.order()) + " > " +
                          std::to_string(kBruteForceCutoff));
  }
}

std::vector<std::int64_t> closure(const FiniteQuadraticForm& f,
                                  const std::vector<std::int64_t>& subgroup,
                                  const Element& x) {
  std::vector<std::int64_t> out;
  const std::int64_t n = f.element_order(x);
  out.reserve(subgroup.size() * static_cast<std::size_t>(n));
  for (std::int64_t s : subgroup) {
    Element y = f.element_at(s);
    for (std::int64_t k = 0; k < n; ++k) {
      out.push_back(f.index_of(y));
      y = f.add(y, x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::int64_t> exact_sqrt(std::int64_t x) {
  if (x < 0) return std::nullopt;
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  if (r * r != x) return std::nullopt;
  return r;
}

Element concat(const Element& a, const Element& b) {
  Element out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Images of the generators of H in N^# with q_N(y_i) = -q_M(g_i) and
// b_N(y_i, y_j) = -b_M(g_i, g_j), injective on H.
void enumerate_isometries(const FiniteQuadraticForm& fm, const FiniteQuadraticForm& fn,
                          const Subquotient& h, std::vector<Element>& images,
                          std::vector<std::vector<Element>>& out) {
  const std::size_t k = h.generators.size();
  if (images.size() == k) {
    const std::int64_t total = h.form.order();
    for (std::int64_t idx = 1; idx < total; ++idx) {
      const Element c = h.form.element_at(idx);
      Element y = fn.zero();
      for (std::size_t j = 0; j < k; ++j) y = fn.add(y, fn.scale(images[j], c[j]));
      if (y == fn.zero()) return;
    }
    out.push_back(images);
    return;
  }
  const std::size_t i = images.size();
  const Element& g = h.generators[i];
  const Rational target_q = mod(-fm.q(g), Integer(2));
  for (std::int64_t idx = 0; idx < fn.order(); ++idx) {
    const Element y = fn.element_at(idx);
    if (fn.element_order(y) != h.form.orders()[i]) continue;
    if (fn.q(y) != target_q) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) {
      ok = fn.b(y, images[j]) == mod(-fm.b(g, h.generators[j]), Integer(1));
    }
    if (!ok) continue;
    images.push_back(y);
    enumerate_isometries(fm, fn, h, images, out);
    images.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> subgroups_of_order(const FiniteQuadraticForm& f,
                                                          std::int64_t order) {
  check_cutoff(f, "discriminant group");
  std::vector<std::vector<std::int64_t>> result;
  if (order < 1 || f.order() % order != 0) return result;
  std::set<std::vector<std::int64_t>> seen{{0}};
  std::vector<std::vector<std::int64_t>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& s : frontier) {
      const auto size = static_cast<std::int64_t>(s.size());
      if (size == order) {
        result.push_back(s);
        continue;
      }
      for (std::int64_t idx = 1; idx < f.order(); ++idx) {
        if (std::binary_search(s.begin(), s.end(), idx)) continue;
        auto grown = closure(f, s, f.element_at(idx));
        const auto g = static_cast<std::int64_t>(grown.size());
        if (order % g != 0) continue;
        if (seen.insert(grown).second) next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

Subquotient gamma_perp_quotient(const FiniteQuadraticForm& fm, const FiniteQuadraticForm& fn,
                                const GluingData& g) {
  const FiniteQuadraticForm sum = orthogonal_sum(fm, fn);
  // Generators of the graph of gamma.
  std::vector<Element> graph;
  for (std::size_t i = 0; i < g.m_gens.size(); ++i) graph.push_back(concat(g.m_gens[i], g.n_gens[i]));

  std::vector<std::int64_t> perp, gamma{0};
  for (std::int64_t idx = 0; idx < sum.order(); ++idx) {
    const Element x = sum.element_at(idx);
    const bool orthogonal = std::all_of(graph.begin(), graph.end(), [&](const Element& y) {
      return sum.b_scaled(x, y) == 0;
    });
    if (orthogonal) perp.push_back(idx);
  }
  for (const Element& y : graph) gamma = closure(sum, gamma, y);
  return subquotient(sum, perp, gamma);
}

std::vector<GluingData> enumerate_gluings(const Lattice& m, const Lattice& n,
                                          const FiniteQuadraticForm& ambient_disc) {
  const FiniteQuadraticForm fm = discriminant_form(m);
  const FiniteQuadraticForm fn = discriminant_form(n);
  check_cutoff(fm, "M^#");
  check_cutoff(fn, "N^#");
  std::vector<GluingData> out;
  const std::int64_t product = fm.order() * fn.order();
  if (product % ambient_disc.order() != 0) return out;
  const auto h = exact_sqrt(product / ambient_disc.order());
  if (!h) return out;

  for (const auto& subgroup : subgroups_of_order(fm, *h)) {
    const Subquotient hq = subquotient(fm, subgroup, {});
    std::vector<Element> images;
    std::vector<std::vector<Element>> isometries;
    enumerate_isometries(fm, fn, hq, images, isometries);
    for (auto& gamma : isometries) {
      GluingData g{hq.generators, std::move(gamma), *h};
      if (forms_isometric(gamma_perp_quotient(fm, fn, g).form, ambient_disc)) {
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

bool verify_certificate(const EmbeddingCertificate& c) {
  const Integer lhs = Integer(c.gluing.h) * c.gluing.h * c.ambient_disc.order();
  const Integer rhs = abs(determinant(c.m) * determinant(c.n));
  if (lhs != rhs) return false;
  const FiniteQuadraticForm fm = discriminant_form(c.m);
  const FiniteQuadraticForm fn = discriminant_form(c.n);
  for (std::size_t i = 0; i < c.gluing.m_gens.size(); ++i) {
    if (fn.q(c.gluing.n_gens[i]) != mod(-fm.q(c.gluing.m_gens[i]), Integer(2))) return false;
  }
  return forms_isometric(gamma_perp_quotient(fm, fn, c.gluing).form, c.ambient_disc);
}

Integer divisibility_in_ambient(const Discriminant& disc, const Lattice& m,
                                const LatticeVector& v, const GluingData& g) {
  const Integer dm = divisibility(m, v);
  const RatVector vq = v.cast<Rational>();
  const FiniteQuadraticForm& f = disc.form;
  for (Integer d = dm; d >= 1; --d) {
    if (dm % d != 0) continue;
    const Element c = disc.class_of(vq / Rational(d));
    const bool orthogonal = std::all_of(g.m_gens.begin(), g.m_gens.end(),
                                        [&](const Element& x) { return f.b_scaled(c, x) == 0; });
    if (orthogonal) return d;
  }
  return 1;
}

Integer divisibility_in_ambient(const Lattice& m, const LatticeVector& v, const GluingData& g) {
  return divisibility_in_ambient(discriminant(m), m, v, g);
}

bool div_one_shortcut(const Lattice& m, const Lattice& n, const Integer& ambient_det) {
  return abs(determinant(n)) == abs(ambient_det * determinant(m));
}

FiniteQuadraticForm unimodular_complement_disc(const Lattice& m) {
  return discriminant_form(m).negated();
}

namespace {

std::vector<detail::Block> complement_blocks() {
  using NL = NamedLattice;
  std::vector<Lattice> ls = {
      make_named(NL::U),        make_named(NL::U, 2),     make_named(NL::U, 3),
      make_named(NL::Rank1, 2), make_named(NL::Rank1, -2), make_named(NL::Rank1, 4),
      make_named(NL::Rank1, -4), make_named(NL::Rank1, 6), make_named(NL::Rank1, -6),
      make_named(NL::Rank1, 10), make_named(NL::Rank1, -10), make_named(NL::Rank1, 14),
      make_named(NL::Rank1, -14), make_named(NL::A, 2),   twist(make_named(NL::A, 2), -1),
      make_named(NL::A, 4),     twist(make_named(NL::A, 4), -1), make_named(NL::D, 4),
      twist(make_named(NL::D, 4), -1), make_named(NL::E, 6), twist(make_named(NL::E, 6), -1),
      make_named(NL::E, 7),     twist(make_named(NL::E, 7), -1), make_named(NL::E, 8),
      twist(make_named(NL::E, 8), -1), make_named(NL::H5), make_named(NL::K7),
      twist(make_named(NL::K7), -1),
  };
  std::vector<detail::Block> out;
  for (const Lattice& l : ls) out.push_back(detail::make_block(l));
  return out;
}

}  // namespace

UnimodularEmbedding embedding_exists_in_unimodular(const Lattice& m, Signature target) {
  if ((target.pos - target.neg) % 8 != 0) {
    throw LatticeError("no even unimodular lattice has signature " + to_string(target));
  }
  UnimodularEmbedding out;
  const Signature s = signature(m);
  if (s.pos > target.pos || s.neg > target.neg) {
    out.decision = Decision::No;
    out.reason = "signature " + to_string(s) + " does not fit in " + to_string(target);
    return out;
  }
  const Signature c{target.pos - s.pos, target.neg - s.neg};
  const FiniteQuadraticForm fm = discriminant_form(m);
  const std::size_t len = length(fm);
  if (static_cast<std::size_t>(c.rank()) < len) {
    out.decision = Decision::No;
    out.reason = "complement rank " + std::to_string(c.rank()) + " is below the length " +
                 std::to_string(len) + " of M^#";
    return out;
  }
  if (static_cast<std::size_t>(c.rank()) >= len + 2) {
    out.decision = Decision::Yes;
    out.reason = "complement rank " + std::to_string(c.rank()) + " >= length + 2";
    return out;
  }
  if (c.rank() == 0) {
    out.decision = Decision::Yes;
    out.complement = Lattice();
    out.reason = "M is unimodular of the target signature";
    return out;
  }
  const FiniteQuadraticForm wanted = fm.negated();
  const Integer det = abs(determinant(m));
  const auto blocks = complement_blocks();
  const auto found = detail::search_block_sums(blocks, c, [&](const std::vector<std::size_t>& ch) {
    Integer d = 1;
    for (std::size_t i : ch) d *= blocks[i].abs_det;
    if (d != det) return false;
    return forms_isometric(discriminant_form(detail::assemble(blocks, ch)), wanted);
  });
  if (found) {
    out.decision = Decision::Yes;
    out.complement = detail::assemble(blocks, *found);
    out.reason = "explicit complement " + out.complement->label();
  } else {
    out.reason = "no sufficient condition applies and the block search found no complement";
  }
  return out;
}

}  // namespace og6
