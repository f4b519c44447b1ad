#include "og6/finite_form.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace og6 {

namespace {

Integer num(const Rational& x) { return boost::multiprecision::numerator(x); }
Integer den(const Rational& x) { return boost::multiprecision::denominator(x); }

bool is_integral(const Rational& x) { return den(x) == 1; }

std::int64_t scaled_integer(const Rational& x, std::int64_t level, std::int64_t modulus,
                            const char* what) {
  const Rational s = x * Integer(level);
  if (!is_integral(s)) {
    throw LatticeError(std::string("finite form: ") + what + " value " + to_string(x) +
                       " is not compatible with the group orders");
  }
  return to_i64(mod(num(s), Integer(modulus)));
}

}  // namespace

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<std::int64_t> orders,
                                         const std::vector<Rational>& q, const RatMatrix& b) {
  const std::size_t n = orders.size();
  if (q.size() != n || static_cast<std::size_t>(b.rows()) != n ||
      static_cast<std::size_t>(b.cols()) != n) {
    throw LatticeError("finite form: generator data has inconsistent sizes");
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (orders[i] < 1) throw LatticeError("finite form: factor orders must be positive");
    if (orders[i] > 1) keep.push_back(i);
  }
  for (std::size_t i : keep) {
    orders_.push_back(orders[i]);
    level_ = std::lcm(level_, orders[i]);
  }
  const std::size_t k = keep.size();
  q_.resize(k);
  b_.resize(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t i = keep[a];
    const Rational qi = q[i];
    const Integer ni(orders[i]);
    if (!is_integral(qi * ni * ni / 2)) {
      throw LatticeError("finite form: q is not well defined on a generator of order " +
                         ni.str());
    }
    if (!is_integral(qi - b(i, i))) {
      throw LatticeError("finite form: q(g) and b(g,g) disagree mod 1");
    }
    q_[a] = scaled_integer(qi, level_, 2 * level_, "q");
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t j = keep[c];
      if (!is_integral(b(i, j) - b(j, i))) throw LatticeError("finite form: b is not symmetric");
      if (!is_integral(b(i, j) * ni)) {
        throw LatticeError("finite form: n_i * b(g_i, g_j) is not integral");
      }
      b_[a * k + c] = scaled_integer(b(i, j), level_, level_, "b");
    }
  }
}

std::int64_t FiniteQuadraticForm::order() const {
  std::int64_t o = 1;
  for (std::int64_t n : orders_) o *= n;
  return o;
}

Rational FiniteQuadraticForm::q(std::size_t i) const { return Rational(q_.at(i), level_); }

Rational FiniteQuadraticForm::b(std::size_t i, std::size_t j) const {
  return Rational(b_.at(i * orders_.size() + j), level_);
}

Rational FiniteQuadraticForm::q(const Element& x) const { return Rational(q_scaled(x), level_); }

Rational FiniteQuadraticForm::b(const Element& x, const Element& y) const {
  return Rational(b_scaled(x, y), level_);
}

std::int64_t FiniteQuadraticForm::q_scaled(const Element& x) const {
  const std::size_t k = orders_.size();
  const std::int64_t m = 2 * level_;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    s = mod(s + mod(x[i] * x[i], m) * q_[i], m);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (x[j] == 0) continue;
      s = mod(s + mod(2 * x[i] * x[j], m) * b_[i * k + j], m);
    }
  }
  return s;
}

std::int64_t FiniteQuadraticForm::b_scaled(const Element& x, const Element& y) const {
  const std::size_t k = orders_.size();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (y[j] == 0) continue;
      s = mod(s + mod(x[i] * y[j], level_) * b_[i * k + j], level_);
    }
  }
  return s;
}

FiniteQuadraticForm::Element FiniteQuadraticForm::generator(std::size_t i) const {
  Element e = zero();
  e.at(i) = 1;
  return e;
}

FiniteQuadraticForm::Element FiniteQuadraticForm::add(const Element& x, const Element& y) const {
  Element out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = mod(x[i] + y[i], orders_[i]);
  return out;
}

FiniteQuadraticForm::Element FiniteQuadraticForm::scale(const Element& x, std::int64_t k) const {
  Element out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = mod(mod(k, orders_[i]) * x[i], orders_[i]);
  return out;
}

FiniteQuadraticForm::Element FiniteQuadraticForm::reduce(Element x) const {
  for (std::size_t i = 0; i < orders_.size(); ++i) x[i] = mod(x[i], orders_[i]);
  return x;
}

std::int64_t FiniteQuadraticForm::element_order(const Element& x) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    o = std::lcm(o, orders_[i] / std::gcd(orders_[i], x[i]));
  }
  return o;
}

std::int64_t FiniteQuadraticForm::index_of(const Element& x) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + x[i];
  return idx;
}

FiniteQuadraticForm::Element FiniteQuadraticForm::element_at(std::int64_t index) const {
  Element x(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    x[i] = index % orders_[i];
    index /= orders_[i];
  }
  return x;
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
  FiniteQuadraticForm out = *this;
  for (auto& v : out.q_) v = mod(-v, 2 * level_);
  for (auto& v : out.b_) v = mod(-v, level_);
  return out;
}

// ---------------------------------------------------------------------------

FiniteQuadraticForm::Element Discriminant::class_of(const RatVector& x) const {
  const auto k = form.generator_count();
  FiniteQuadraticForm::Element c(k);
  const RatVector y = coordinate_rows.cast<Rational>() * x;
  for (std::size_t i = 0; i < k; ++i) {
    const Rational scaled = y(static_cast<Eigen::Index>(i)) * Integer(form.orders()[i]);
    if (!is_integral(scaled)) throw LatticeError("vector is not in the dual lattice");
    c[i] = to_i64(mod(num(scaled), Integer(form.orders()[i])));
  }
  return c;
}

RatVector Discriminant::lift(const FiniteQuadraticForm::Element& c) const {
  RatVector out = RatVector::Zero(generator_numerators.rows());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Rational f(Integer(c[i]), Integer(form.orders()[i]));
    out += f * generator_numerators.col(static_cast<Eigen::Index>(i)).cast<Rational>();
  }
  return out;
}

Discriminant discriminant(const Lattice& l) {
  // u G v = d, so L^v = G^{-1} Z^r = v d^{-1} Z^r: the classes of the columns
  // v_i / d_i generate L^#, with order d_i.
  const Eigen::Index r = l.rank();
  Discriminant out;
  if (r == 0) {
    out.generator_numerators = IntMatrix(0, 0);
    out.coordinate_rows = IntMatrix(0, 0);
    return out;
  }
  const SmithDecomposition s = smith(l.gram());
  const IntMatrix v_inv = unimodular_inverse(s.v);

  std::vector<Eigen::Index> nontrivial;
  for (Eigen::Index i = 0; i < r; ++i) {
    if (s.d(i, i) != 1) nontrivial.push_back(i);
  }
  const auto k = static_cast<Eigen::Index>(nontrivial.size());
  std::vector<std::int64_t> orders;
  std::vector<Rational> q;
  RatMatrix b(k, k);
  out.generator_numerators = IntMatrix(r, k);
  out.coordinate_rows = IntMatrix(k, r);
  for (Eigen::Index a = 0; a < k; ++a) {
    const Eigen::Index i = nontrivial[static_cast<std::size_t>(a)];
    orders.push_back(to_i64(s.d(i, i)));
    out.generator_numerators.col(a) = s.v.col(i);
    out.coordinate_rows.row(a) = v_inv.row(i);
  }
  for (Eigen::Index a = 0; a < k; ++a) {
    const IntVector va = out.generator_numerators.col(a);
    const Integer da(orders[static_cast<std::size_t>(a)]);
    for (Eigen::Index c = 0; c < k; ++c) {
      const IntVector vc = out.generator_numerators.col(c);
      const Integer dc(orders[static_cast<std::size_t>(c)]);
      b(a, c) = mod(Rational(va.dot(l.gram() * vc), da * dc), Integer(1));
    }
    q.push_back(mod(Rational(va.dot(l.gram() * va), da * da), Integer(2)));
  }
  out.form = FiniteQuadraticForm(std::move(orders), q, b);
  return out;
}

FiniteQuadraticForm discriminant_form(const Lattice& l) { return discriminant(l).form; }

FiniteQuadraticForm orthogonal_sum(const FiniteQuadraticForm& f, const FiniteQuadraticForm& g) {
  const std::size_t m = f.generator_count(), n = g.generator_count();
  std::vector<std::int64_t> orders = f.orders();
  orders.insert(orders.end(), g.orders().begin(), g.orders().end());
  std::vector<Rational> q;
  RatMatrix b = RatMatrix::Zero(static_cast<Eigen::Index>(m + n), static_cast<Eigen::Index>(m + n));
  for (std::size_t i = 0; i < m; ++i) {
    q.push_back(f.q(i));
    for (std::size_t j = 0; j < m; ++j) b(i, j) = f.b(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    q.push_back(g.q(i));
    for (std::size_t j = 0; j < n; ++j) b(m + i, m + j) = g.b(i, j);
  }
  return FiniteQuadraticForm(std::move(orders), q, b);
}

Subquotient subquotient(const FiniteQuadraticForm& ambient,
                        const std::vector<std::int64_t>& subgroup,
                        const std::vector<std::int64_t>& isotropic) {
  using Element = FiniteQuadraticForm::Element;
  std::vector<Element> iso;
  iso.reserve(isotropic.size());
  for (std::int64_t i : isotropic) iso.push_back(ambient.element_at(i));

  // Coset representative: least index in x + I.
  auto rep = [&](const Element& x) {
    std::int64_t best = -1;
    for (const Element& i : iso) {
      const std::int64_t idx = ambient.index_of(ambient.add(x, i));
      if (best < 0 || idx < best) best = idx;
    }
    return best < 0 ? ambient.index_of(x) : best;
  };

  std::vector<std::int64_t> reps;
  reps.reserve(subgroup.size());
  for (std::int64_t s : subgroup) reps.push_back(rep(ambient.element_at(s)));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

  // Greedy generating set with relations: each new generator g_k has a least
  // multiple m_k g_k in the span of the previous ones.
  std::vector<Element> gens;
  std::vector<std::vector<Integer>> relations;
  std::unordered_map<std::int64_t, std::vector<Integer>> span;
  span.emplace(rep(ambient.zero()), std::vector<Integer>{});
  for (std::int64_t r : reps) {
    if (span.count(r)) continue;
    const Element g = ambient.element_at(r);
    const std::size_t k = gens.size();
    std::int64_t m = 1;
    Element multiple = g;
    while (!span.count(rep(multiple))) {
      multiple = ambient.add(multiple, g);
      ++m;
    }
    std::vector<Integer> rel = span.at(rep(multiple));
    rel.resize(k + 1, Integer(0));
    for (auto& x : rel) x = -x;
    rel[k] += m;
    relations.push_back(std::move(rel));

    std::unordered_map<std::int64_t, std::vector<Integer>> grown;
    for (const auto& [idx, coeffs] : span) {
      Element x = ambient.element_at(idx);
      for (std::int64_t c = 0; c < m; ++c) {
        std::vector<Integer> cc = coeffs;
        cc.resize(k + 1, Integer(0));
        cc[k] = c;
        grown.emplace(rep(x), std::move(cc));
        x = ambient.add(x, g);
      }
    }
    span = std::move(grown);
    gens.push_back(g);
  }

  const auto k = static_cast<Eigen::Index>(gens.size());
  Subquotient out;
  if (k == 0) return out;
  IntMatrix rel = IntMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto& row = relations[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < row.size(); ++j) rel(i, static_cast<Eigen::Index>(j)) = row[j];
  }
  // Z^k / rows(rel) is isomorphic to Z^k / rows(d) via x -> x v; the new
  // generators are the rows of v^{-1} in terms of the old ones.
  const SmithDecomposition s = smith(rel);
  const IntMatrix v_inv = unimodular_inverse(s.v);

  std::vector<std::int64_t> orders;
  for (Eigen::Index i = 0; i < k; ++i) {
    const std::int64_t d = to_i64(s.d(i, i));
    if (d == 1) continue;
    Element f = ambient.zero();
    for (Eigen::Index j = 0; j < k; ++j) {
      const std::int64_t c = to_i64(mod(v_inv(i, j), Integer(ambient.level())));
      f = ambient.add(f, ambient.scale(gens[static_cast<std::size_t>(j)], c));
    }
    orders.push_back(d);
    out.generators.push_back(f);
  }
  const auto n = static_cast<Eigen::Index>(orders.size());
  std::vector<Rational> q;
  RatMatrix b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    q.push_back(ambient.q(out.generators[static_cast<std::size_t>(i)]));
    for (Eigen::Index j = 0; j < n; ++j) {
      b(i, j) = ambient.b(out.generators[static_cast<std::size_t>(i)],
                          out.generators[static_cast<std::size_t>(j)]);
    }
  }
  out.form = FiniteQuadraticForm(std::move(orders), q, b);
  return out;
}

FiniteQuadraticForm normal_form(const FiniteQuadraticForm& f) {
  // Cyclic factors of orders d_1 | d_2 | ... with every d_i > 1 already are
  // invariant-factor generators. Discriminant forms arrive this way from the
  // Smith form, which keeps large groups off the enumeration below.
  const auto& ord = f.orders();
  bool chain = std::all_of(ord.begin(), ord.end(), [](std::int64_t d) { return d > 1; });
  for (std::size_t i = 0; chain && i + 1 < ord.size(); ++i) chain = ord[i + 1] % ord[i] == 0;
  if (chain) return f;
  std::vector<std::int64_t> all(static_cast<std::size_t>(f.order()));
  std::iota(all.begin(), all.end(), 0);
  return subquotient(f, all, {}).form;
}

std::size_t length(const FiniteQuadraticForm& f) {
  // The length is the largest p-rank over the primes dividing the order.
  const FiniteQuadraticForm nf = normal_form(f);
  return nf.generator_count();
}

bool is_p_elementary(const FiniteQuadraticForm& f, int p) {
  const FiniteQuadraticForm nf = normal_form(f);
  return std::all_of(nf.orders().begin(), nf.orders().end(),
                     [p](std::int64_t n) { return n == p; });
}

int delta_invariant(const FiniteQuadraticForm& f) {
  if (!is_p_elementary(f, 2)) throw LatticeError("delta is defined for 2-elementary forms only");
  // q is integral everywhere iff it is integral on generators, since the
  // cross terms 2 b(x, y) are integral for 2-torsion elements.
  for (std::size_t i = 0; i < f.generator_count(); ++i) {
    if (!is_integral(f.q(i))) return 1;
  }
  return 0;
}

namespace {

void check_cutoff(const FiniteQuadraticForm& f) {
  if (f.order() > kBruteForceCutoff) {
    throw BruteForceLimit("undecided-by-brute-force: group of order " +
                          std::to_string(f.order()) + " exceeds the cutoff " +
                          std::to_string(kBruteForceCutoff));
  }
}

// Images y_i of the generators of f in g with matching orders, q and b.
bool extend_isometry(const FiniteQuadraticForm& f, const FiniteQuadraticForm& g,
                     const std::vector<std::vector<FiniteQuadraticForm::Element>>& candidates,
                     std::vector<FiniteQuadraticForm::Element>& images) {
  const std::size_t i = images.size();
  if (i == f.generator_count()) {
    // Injectivity: no nontrivial combination of images vanishes.
    const std::int64_t total = f.order();
    for (std::int64_t idx = 1; idx < total; ++idx) {
      const auto c = f.element_at(idx);
      auto y = g.zero();
      for (std::size_t j = 0; j < c.size(); ++j) y = g.add(y, g.scale(images[j], c[j]));
      if (y == g.zero()) return false;
    }
    return true;
  }
  for (const auto& y : candidates[i]) {
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) {
      ok = g.b_scaled(y, images[j]) == f.b_scaled(f.generator(i), f.generator(j));
    }
    if (!ok) continue;
    images.push_back(y);
    if (extend_isometry(f, g, candidates, images)) return true;
    images.pop_back();
  }
  return false;
}

}  // namespace

bool forms_isometric(const FiniteQuadraticForm& f_in, const FiniteQuadraticForm& g_in) {
  check_cutoff(f_in);
  check_cutoff(g_in);
  const FiniteQuadraticForm f = normal_form(f_in);
  const FiniteQuadraticForm g = normal_form(g_in);
  if (f.orders() != g.orders()) return false;
  if (f.order() == 1) return true;

  std::vector<std::vector<FiniteQuadraticForm::Element>> candidates(f.generator_count());
  for (std::int64_t idx = 0; idx < g.order(); ++idx) {
    const auto y = g.element_at(idx);
    const std::int64_t oy = g.element_order(y);
    const std::int64_t qy = g.q_scaled(y);
    for (std::size_t i = 0; i < f.generator_count(); ++i) {
      if (oy == f.orders()[i] && qy == f.q_scaled(f.generator(i))) candidates[i].push_back(y);
    }
  }
  std::vector<FiniteQuadraticForm::Element> images;
  return extend_isometry(f, g, candidates, images);
}

bool same_genus(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank()) return false;
  if (!(signature(a) == signature(b))) return false;
  return forms_isometric(discriminant_form(a), discriminant_form(b));
}

bool satisfies_polarization(const FiniteQuadraticForm& f) {
  check_cutoff(f);
  const std::int64_t n = f.order();
  const std::int64_t two_level = 2 * f.level();
  for (std::int64_t i = 0; i < n; ++i) {
    const auto x = f.element_at(i);
    for (std::int64_t j = i; j < n; ++j) {
      const auto y = f.element_at(j);
      const std::int64_t lhs = mod(f.q_scaled(f.add(x, y)) - f.q_scaled(x) - f.q_scaled(y), two_level);
      if (lhs != mod(2 * f.b_scaled(x, y), two_level)) return false;
    }
  }
  return true;
}

int legendre(const Integer& x, int p) {
  const Integer pp(p);
  Integer base = mod(x, pp);
  if (base == 0) return 0;
  Integer result = 1;
  int e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = mod(result * base, pp);
    base = mod(base * base, pp);
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

std::string to_string(const ElementaryInvariants& inv) {
  std::ostringstream os;
  os << "p=" << inv.p << " t=(" << inv.t_plus << "," << inv.t_minus << ") a=" << inv.a;
  if (inv.p == 2) {
    os << " delta=" << inv.delta;
  } else {
    os << " eps=" << (inv.square_class > 0 ? "+1" : "-1");
  }
  return os.str();
}

ElementaryInvariants elementary_invariants(const FiniteQuadraticForm& f_in, Signature s, int p) {
  const FiniteQuadraticForm f = normal_form(f_in);
  if (!is_p_elementary(f, p)) {
    throw LatticeError("form is not " + std::to_string(p) + "-elementary");
  }
  ElementaryInvariants inv;
  inv.p = p;
  inv.t_plus = s.pos;
  inv.t_minus = s.neg;
  inv.a = static_cast<int>(f.generator_count());
  if (p == 2) {
    inv.delta = delta_invariant(f);
  } else if (inv.a > 0) {
    // The level is p, so the scaled bilinear matrix is p * b, the inverse of
    // the unit part of the p-scaled Jordan component mod p.
    IntMatrix pb(inv.a, inv.a);
    for (int i = 0; i < inv.a; ++i) {
      for (int j = 0; j < inv.a; ++j) {
        pb(i, j) = f.b_scaled(f.generator(static_cast<std::size_t>(i)),
                              f.generator(static_cast<std::size_t>(j)));
      }
    }
    inv.square_class = legendre(bareiss_determinant(pb), p);
  }
  return inv;
}

ElementaryInvariants elementary_invariants(const Lattice& l, int p) {
  return elementary_invariants(discriminant_form(l), signature(l), p);
}

}  // namespace og6
