#include "og6/classifier.hpp"

#include "og6/expr.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#ifndef OG6_TABLE_PATH
#define OG6_TABLE_PATH "data/classification.txt"
#endif

namespace og6 {

namespace {

const Signature kOG6Signature{3, 5};
constexpr int kOG6Rank = 8;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string format_vector(const LatticeVector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v(i).str();
  }
  return out + ")";
}

const Lattice& og6_lattice() {
  static const Lattice l = make_named(NamedLattice::OG6);
  return l;
}

}  // namespace

bool half_class_exists(const FiniteQuadraticForm& f, const GluingData& g) {
  const Rational three_halves(3, 2);
  for (std::int64_t idx = 0; idx < f.order(); ++idx) {
    const auto c = f.element_at(idx);
    if (f.element_order(c) > 2 || f.q(c) != three_halves) continue;
    const bool orthogonal = std::all_of(g.m_gens.begin(), g.m_gens.end(), [&](const auto& x) {
      return f.b_scaled(c, x) == 0;
    });
    if (orthogonal) return true;
  }
  return false;
}

ClassificationRow make_row(int index, int order, const std::string& coinvariant,
                           const std::string& invariant, bool expected_induced,
                           bool expected_quotient, std::string note) {
  ClassificationRow row;
  row.index = index;
  row.order = order;
  row.coinvariant_expr = coinvariant;
  row.invariant_expr = invariant;
  row.coinvariant = lattice_from_expression(coinvariant);
  row.invariant = lattice_from_expression(invariant);
  row.expected_induced = expected_induced;
  row.expected_quotient = expected_quotient;
  row.note = std::move(note);

  const std::string where = "row " + std::to_string(index) + " (p=" + std::to_string(order) + ")";
  if (!is_prime(order)) throw LatticeError(where + ": group order is not prime");
  if (row.coinvariant.rank() + row.invariant.rank() != kOG6Rank) {
    throw LatticeError(where + ": ranks do not add up to 8");
  }
  if (!(signature(row.coinvariant) + signature(row.invariant) == kOG6Signature)) {
    throw LatticeError(where + ": signatures do not add up to (3,5)");
  }
  if (order > 2 && row.coinvariant.rank() % (order - 1) != 0) {
    throw LatticeError(where + ": rank of L_G is not divisible by p-1");
  }
  return row;
}

std::vector<ClassificationRow> load_table(std::istream& in, const std::string& source) {
  std::vector<ClassificationRow> rows;
  std::string line;
  int line_no = 0;
  auto flag = [&](const std::string& s) {
    if (s == "y" || s == "yes") return true;
    if (s == "n" || s == "no") return false;
    throw LatticeError(source + ":" + std::to_string(line_no) + ": expected y or n, got '" + s +
                       "'");
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string note;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      note = trim(line.substr(hash + 1));
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ';')) fields.push_back(trim(field));
    if (fields.size() != 6) {
      throw LatticeError(source + ":" + std::to_string(line_no) + ": expected 6 fields, got " +
                         std::to_string(fields.size()));
    }
    try {
      rows.push_back(make_row(std::stoi(fields[0]), std::stoi(fields[1]), fields[2], fields[3],
                              flag(fields[4]), flag(fields[5]), note));
    } catch (const std::invalid_argument&) {
      throw LatticeError(source + ":" + std::to_string(line_no) + ": malformed integer field");
    }
  }
  return rows;
}

std::vector<ClassificationRow> load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LatticeError("cannot open table file " + path.string());
  return load_table(in, path.string());
}

std::filesystem::path default_table_path() { return OG6_TABLE_PATH; }

Integer mukai_pairing(const Lattice& ns, const MukaiVector& a, const MukaiVector& b) {
  return inner(ns, a.l, b.l) - a.r * b.s - b.r * a.s;
}

bool is_positive_mukai_vector(const Lattice& ns, const MukaiVector& v) {
  const bool l_zero = v.l.isZero();
  if (v.r == 0 && l_zero && v.s == 0) return false;
  if (mukai_pairing(ns, v, v) < 2) return false;
  if (v.r > 0) return true;
  if (v.r == 0 && !l_zero) return true;
  return v.r == 0 && l_zero && v.s > 0;
}

Signature lambda11_signature(Signature ns) {
  if (ns.neg < 1) throw LatticeError("NS signature " + to_string(ns) + " has no negative part");
  return {ns.pos + 1, ns.neg - 1};
}

ElementaryGenusQuery lambda11_invariants(const ClassificationRow& row) {
  const FiniteQuadraticForm f = discriminant_form(row.coinvariant);
  if (!is_p_elementary(f, row.order)) {
    throw LatticeError("L_G = " + row.coinvariant_expr + " is not " +
                       std::to_string(row.order) + "-elementary");
  }
  const Signature s = lambda11_signature(signature(row.invariant));
  return {elementary_invariants(f.negated(), s, row.order)};
}

bool kernel_screen_allows(const Lattice& l) {
  const auto r = static_cast<std::size_t>(l.rank());
  if (r > 24) throw BruteForceLimit("undecided-by-brute-force: kernel screen rank above 24");
  std::vector<std::int64_t> g(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) g[i * r + j] = to_i64(l.gram()(i, j));
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    bool in_kernel = true;
    std::int64_t norm = 0;
    for (std::size_t i = 0; i < r && in_kernel; ++i) {
      std::int64_t row = 0;
      for (std::size_t j = 0; j < r; ++j) {
        if (mask >> j & 1) row += g[i * r + j];
      }
      if (row % 2 != 0) in_kernel = false;
      if (mask >> i & 1) norm += row;
    }
    if (in_kernel && mod(norm, 4) == 2) return true;
  }
  return false;
}

SigmaResult sigma_class_exists(const ClassificationRow& row, int bound) {
  SigmaResult out;
  const Lattice& m = row.invariant;
  const Lattice& n = row.coinvariant;
  const Lattice& ambient = og6_lattice();

  if (div_one_shortcut(m, n, determinant(ambient))) {
    out.decision = Decision::No;
    out.rule = "determinant-shortcut";
    out.detail = "|det L_G| = " + abs(determinant(n)).str() + " = |det L| * |det L^G| = 4 * " +
                 abs(determinant(m)).str() + ", so every v in L^G has (v,L) = 1";
    return out;
  }
  if (!kernel_screen_allows(m)) {
    out.decision = Decision::No;
    out.rule = "kernel-screen";
    out.detail =
        "no class c mod 2 with G c = 0 mod 2 has c^2 = 2 mod 4, so no v in L^G has v^2 = -2 "
        "and (v,L) = 2";
    return out;
  }
  const std::vector<GluingData> gluings = enumerate_gluings(m, n, discriminant_form(ambient));
  out.gluing_count = gluings.size();
  if (gluings.empty()) {
    out.decision = Decision::No;
    out.rule = "no-gluing";
    out.detail = "L^G and L_G admit no gluing into the OG6 discriminant form";
    return out;
  }
  const Discriminant disc = discriminant(m);
  std::vector<GluingData> viable;
  for (const GluingData& g : gluings) {
    if (half_class_exists(disc.form, g)) viable.push_back(g);
  }
  if (viable.empty()) {
    out.decision = Decision::No;
    out.rule = "discriminant-screen";
    out.detail = "in each of the " + std::to_string(gluings.size()) +
                 " gluing(s), no class c in (L^G)^# with 2c = 0, c orthogonal to H and "
                 "q(c) = 3/2; but v/2 would be such a class";
    return out;
  }
  for_each_vector_of_norm(m, -2, bound, [&](const LatticeVector& v) {
    for (const GluingData& g : viable) {
      if (divisibility_in_ambient(disc, m, v, g) == 2) {
        out.decision = Decision::Yes;
        out.witness = v;
        out.gluing = g;
        return false;
      }
    }
    return true;
  });
  if (out.decision == Decision::Yes) {
    out.rule = "witness";
    out.detail = "v = " + format_vector(*out.witness) + " in L^G has v^2 = -2 and (v,L) = 2 (h = " +
                 std::to_string(out.gluing->h) + ", " + std::to_string(gluings.size()) +
                 " gluing(s))";
  } else {
    out.rule = "bounded-search";
    out.detail = "no witness with coordinates in [-" + std::to_string(bound) + "," +
                 std::to_string(bound) + "] across " + std::to_string(gluings.size()) +
                 " gluing(s); not a proof of absence";
  }
  return out;
}

Verdict is_numerical_moduli_space(const ClassificationRow& row, int bound) {
  Verdict v;
  const SigmaResult sigma = sigma_class_exists(row, bound);
  v.evidence.push_back({sigma.rule, sigma.detail});

  bool split = false;
  if (signature(row.invariant).neg == 0) {
    v.evidence.push_back({"u-split", "not applicable: L^G has no negative part"});
  } else {
    const ElementaryGenusQuery q = lambda11_invariants(row);
    split = splits_off_U(q);
    v.evidence.push_back({"u-split", "Lambda8^{1,1}: " + to_string(q.inv) +
                                         (split ? "; U splits off" : "; no U summand")});
  }
  v.nms = sigma.decision == Decision::Yes && split;
  v.undecided = sigma.decision == Decision::Undecided && split;
  return v;
}

int determinant_of_action(int p, int coinvariant_rank) {
  if (!is_prime(p)) throw LatticeError("group order " + std::to_string(p) + " is not prime");
  if (coinvariant_rank < 0) throw LatticeError("negative rank");
  if (p == 2) return coinvariant_rank % 2 == 0 ? 1 : -1;
  if (coinvariant_rank % (p - 1) != 0) {
    throw LatticeError("rank of L_G must be divisible by p-1 for p = " + std::to_string(p));
  }
  return 1;
}

Verdict classify_row(const ClassificationRow& row, int bound) {
  Verdict v = is_numerical_moduli_space(row, bound);
  v.quotient = v.nms;
  v.evidence.push_back({"quotient-equals-nms", "L^G = NS, so a qualifying sigma is G-fixed"});
  const int det = determinant_of_action(row.order, static_cast<int>(row.coinvariant.rank()));
  v.induced = v.nms && det == 1;
  v.evidence.push_back({"determinant-of-action", "det = " + std::to_string(det) +
                                                     " (rank L_G = " +
                                                     std::to_string(row.coinvariant.rank()) + ")"});
  if (!row.note.empty()) v.evidence.push_back({"note", row.note});
  return v;
}

std::vector<TableResult> classify_table(const std::vector<ClassificationRow>& rows, int bound) {
  std::vector<TableResult> out;
  out.reserve(rows.size());
  for (const ClassificationRow& row : rows) {
    Verdict v = classify_row(row, bound);
    const bool match = !v.undecided && v.induced == row.expected_induced &&
                       v.quotient == row.expected_quotient;
    out.push_back({row, std::move(v), match});
  }
  return out;
}

std::vector<std::array<std::array<int, 2>, 2>> picard_incidence_actions(int box) {
  // Degree-5 intersection numbers: H1^i H2^(5-i) is 1 for i = 2, 3 and 0
  // otherwise. H1.l1 = H2.l2 = 0 and H1.l2 = H2.l1 = 1 on fibre lines.
  auto top = [](long a, long b, long c, long d, int i) {
    // Coefficients of x^k in (a x + b y)^i (c x + d y)^(5-i).
    std::array<long, 6> poly{1, 0, 0, 0, 0, 0};
    auto multiply = [&poly](long x, long y) {
      std::array<long, 6> next{};
      for (int k = 0; k < 6; ++k) {
        if (poly[k] == 0) continue;
        if (k + 1 < 6) next[k + 1] += poly[k] * x;
        next[k] += poly[k] * y;
      }
      poly = next;
    };
    for (int k = 0; k < i; ++k) multiply(a, b);
    for (int k = i; k < 5; ++k) multiply(c, d);
    return poly[2] + poly[3];
  };
  std::vector<std::array<std::array<int, 2>, 2>> out;
  for (int a = -box; a <= box; ++a) {
    for (int b = -box; b <= box; ++b) {
      for (int c = -box; c <= box; ++c) {
        for (int d = -box; d <= box; ++d) {
          if (a * a * b * b * (a + b) != 0 || c * c * d * d * (c + d) != 0) continue;
          const int det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          bool ok = true;
          for (int i = 0; i <= 5 && ok; ++i) ok = top(a, b, c, d, i) == (i == 2 || i == 3 ? 1 : 0);
          if (!ok) continue;
          // f*H1 . l1 = b, f*H1 . l2 = a, f*H2 . l1 = d, f*H2 . l2 = c.
          if (a < 0 || b < 0 || c < 0 || d < 0) continue;
          out.push_back({{{a, b}, {c, d}}});
        }
      }
    }
  }
  return out;
}

Lattice sigma_complement(const Lattice& l, const LatticeVector& sigma) {
  if (inner(l, sigma, sigma) != -2) throw LatticeError("sigma^2 must be -2");
  if (divisibility(l, sigma) != 2) throw LatticeError("sigma must have divisibility 2");
  IntMatrix rows(1, sigma.size());
  rows.row(0) = sigma.transpose();
  return orthogonal_complement(l, rows).with_label("sigma-perp");
}

}  // namespace og6
