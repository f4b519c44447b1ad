// og6lat: command-line front end for the lattice library.
//
// Exit codes: 0 success, 1 table mismatch, 2 parse or usage error,
// 3 undecided (brute-force cutoff or inconclusive witness search).

#include "og6/classifier.hpp"
#include "og6/expr.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

namespace {

using og6::Integer;
using og6::Lattice;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitUndecided = 3;

struct Options {
  bool json = false;
  int bound = og6::kDefaultSearchBound;
  std::string expr;
  std::string m_expr, n_expr, ambient_expr;
  bool table = false;
  int row = 0;
  int order = 2;
  std::string ns_expr, t_expr;
  std::string table_file;
};

Json gram_json(const og6::IntMatrix& g) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < g.cols(); ++j) row.push_back(og6::to_i64(g(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json element_json(const og6::FiniteQuadraticForm::Element& e) {
  Json out = Json::array();
  for (auto x : e) out.push_back(x);
  return out;
}

Json vector_json(const og6::LatticeVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(og6::to_i64(v(i)));
  return out;
}

std::string vector_text(const og6::LatticeVector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + v(i).str();
  return out + ")";
}

std::string element_text(const og6::FiniteQuadraticForm::Element& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

std::vector<int> prime_divisors(std::int64_t n) {
  std::vector<int> out;
  for (int p = 2; static_cast<std::int64_t>(p) * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

void emit(const Options& o, const Json& report, const std::string& text) {
  if (o.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_info(const Options& o) {
  const Lattice l = og6::lattice_from_expression(o.expr);
  const og6::Signature s = og6::signature(l);
  const Integer det = og6::determinant(l);
  Json r;
  r["command"] = "lattice info";
  r["expression"] = l.label();
  r["rank"] = l.rank();
  r["signature"] = {s.pos, s.neg};
  r["determinant"] = det.str();
  r["even"] = true;
  r["gram"] = gram_json(l.gram());
  std::ostringstream t;
  t << "lattice:     " << l.label() << "\n"
    << "rank:        " << l.rank() << "\n"
    << "signature:   " << og6::to_string(s) << "\n"
    << "determinant: " << det << "\n"
    << "even:        yes\n"
    << "gram:        " << og6::format_gram(l.gram()) << "\n";
  emit(o, r, t.str());
  return kExitOk;
}

int cmd_disc(const Options& o) {
  const Lattice l = og6::lattice_from_expression(o.expr);
  const og6::FiniteQuadraticForm f = og6::discriminant_form(l);
  const std::size_t k = f.generator_count();
  Json r;
  r["command"] = "lattice disc";
  r["expression"] = l.label();
  r["orders"] = f.orders();
  Json q = Json::array(), b = Json::array();
  std::ostringstream t;
  t << "lattice: " << l.label() << "\n";
  t << "group:   ";
  if (k == 0) t << "trivial";
  for (std::size_t i = 0; i < k; ++i) t << (i ? " x " : "") << "Z/" << f.orders()[i];
  t << "\nq:       (";
  for (std::size_t i = 0; i < k; ++i) {
    q.push_back(og6::to_string(f.q(i)));
    t << (i ? ", " : "") << og6::to_string(f.q(i));
  }
  t << ")\nb:       [";
  for (std::size_t i = 0; i < k; ++i) {
    Json row = Json::array();
    t << (i ? ", " : "") << "[";
    for (std::size_t j = 0; j < k; ++j) {
      row.push_back(og6::to_string(f.b(i, j)));
      t << (j ? ", " : "") << og6::to_string(f.b(i, j));
    }
    t << "]";
    b.push_back(row);
  }
  t << "]\n";
  r["q"] = q;
  r["b"] = b;
  r["order"] = f.order();
  const std::size_t len = og6::length(f);
  r["length"] = len;
  Json elementary = Json::array();
  for (int p : prime_divisors(f.order())) {
    if (og6::is_p_elementary(f, p)) elementary.push_back(p);
  }
  r["p_elementary"] = elementary;
  t << "order:   " << f.order() << "\nlength:  " << len << "\n";
  t << "p-elementary for p in {";
  for (std::size_t i = 0; i < elementary.size(); ++i) t << (i ? "," : "") << elementary[i].get<int>();
  t << "}" << (f.order() == 1 ? " (unimodular: every p)" : "") << "\n";
  if (og6::is_p_elementary(f, 2)) {
    const int delta = og6::delta_invariant(f);
    r["delta"] = delta;
    t << "delta:   " << delta << "\n";
  } else {
    r["delta"] = nullptr;
  }
  emit(o, r, t.str());
  return kExitOk;
}

int cmd_embed(const Options& o) {
  const Lattice m = og6::lattice_from_expression(o.m_expr);
  const Lattice n = og6::lattice_from_expression(o.n_expr);
  const Lattice l = og6::lattice_from_expression(o.ambient_expr);
  const auto ambient_disc = og6::discriminant_form(l);
  const auto gluings = og6::enumerate_gluings(m, n, ambient_disc);
  const bool shortcut = og6::div_one_shortcut(m, n, og6::determinant(l));
  const auto disc = og6::discriminant(m);
  const auto vectors = og6::vectors_of_norm(m, -2, o.bound);

  Json r;
  r["command"] = "embed check";
  r["m"] = m.label();
  r["n"] = n.label();
  r["ambient"] = l.label();
  r["div_one_shortcut"] = shortcut;
  Json gl = Json::array();
  std::ostringstream t;
  t << "M = " << m.label() << ", N = " << n.label() << ", L = " << l.label() << "\n";
  t << "determinant shortcut: " << (shortcut ? "yes, (v,L) = 1 on all of M" : "no") << "\n";
  t << gluings.size() << " gluing(s)\n";
  for (std::size_t i = 0; i < gluings.size(); ++i) {
    const auto& g = gluings[i];
    Json gj;
    gj["h"] = g.h;
    Json mg = Json::array(), ng = Json::array();
    for (const auto& e : g.m_gens) mg.push_back(element_json(e));
    for (const auto& e : g.n_gens) ng.push_back(element_json(e));
    gj["m_gens"] = mg;
    gj["n_gens"] = ng;
    t << "  gluing " << i + 1 << ": h = " << g.h << ", H = <";
    for (std::size_t j = 0; j < g.m_gens.size(); ++j) {
      t << (j ? ", " : "") << element_text(g.m_gens[j]) << " -> " << element_text(g.n_gens[j]);
    }
    t << ">\n";
    Json div = Json::array();
    for (const auto& v : vectors) {
      const Integer d = og6::divisibility_in_ambient(disc, m, v, g);
      div.push_back({{"v", vector_json(v)},
                     {"div_m", og6::to_i64(og6::divisibility(m, v))},
                     {"div_l", og6::to_i64(d)}});
      t << "    v = " << vector_text(v) << "  (v,M) = " << og6::divisibility(m, v)
        << "  (v,L) = " << d << "\n";
    }
    gj["divisibility"] = div;
    gl.push_back(gj);
  }
  r["gluings"] = gl;
  r["norm_minus_two_vectors"] = vectors.size();
  emit(o, r, t.str());
  return kExitOk;
}

Json verdict_json(const og6::ClassificationRow& row, const og6::Verdict& v,
                  std::optional<bool> match) {
  Json j;
  j["index"] = row.index;
  j["order"] = row.order;
  j["coinvariant"] = row.coinvariant_expr;
  j["invariant"] = row.invariant_expr;
  j["nms"] = v.nms;
  j["induced"] = v.induced;
  j["quotient"] = v.quotient;
  j["undecided"] = v.undecided;
  if (match) {
    j["expected_induced"] = row.expected_induced;
    j["expected_quotient"] = row.expected_quotient;
    j["match"] = *match;
  }
  Json ev = Json::array();
  for (const auto& e : v.evidence) ev.push_back({{"rule", e.rule}, {"detail", e.detail}});
  j["evidence"] = ev;
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string verdict_text(const og6::ClassificationRow& row, const og6::Verdict& v,
                         std::optional<bool> match) {
  std::ostringstream t;
  t << "row " << row.index << " (p=" << row.order << "): L_G = " << row.coinvariant_expr
    << ", L^G = " << row.invariant_expr << "\n";
  t << "  nms: " << yes_no(v.nms) << "  induced: " << yes_no(v.induced)
    << "  quotient: " << yes_no(v.quotient) << (v.undecided ? "  (undecided)" : "");
  if (match) {
    t << "  expected: " << yes_no(row.expected_induced) << "/" << yes_no(row.expected_quotient)
      << "  " << (*match ? "MATCH" : "MISMATCH");
  }
  t << "\n";
  for (const auto& e : v.evidence) t << "    " << e.rule << ": " << e.detail << "\n";
  return t.str();
}

int cmd_classify(const Options& o) {
  const bool adhoc = !o.ns_expr.empty() || !o.t_expr.empty();
  const int modes = int(o.table) + int(o.row > 0) + int(adhoc);
  if (modes != 1) throw CLI::ValidationError("classify", "give exactly one of --table, --row, or --ns/--t");
  if (adhoc && (o.ns_expr.empty() || o.t_expr.empty())) {
    throw CLI::ValidationError("classify", "--ns and --t must be given together");
  }

  if (adhoc) {
    const auto row = og6::make_row(0, o.order, o.t_expr, o.ns_expr);
    const auto v = og6::classify_row(row, o.bound);
    Json r;
    r["command"] = "og6 classify";
    r["mode"] = "adhoc";
    r["rows"] = Json::array({verdict_json(row, v, std::nullopt)});
    emit(o, r, verdict_text(row, v, std::nullopt));
    return v.undecided ? kExitUndecided : kExitOk;
  }

  const auto path = o.table_file.empty() ? og6::default_table_path()
                                         : std::filesystem::path(o.table_file);
  auto rows = og6::load_table(path);
  if (o.row > 0) {
    std::erase_if(rows, [&](const og6::ClassificationRow& r) {
      return r.index != o.row || r.order != o.order;
    });
    if (rows.empty()) {
      throw CLI::ValidationError("classify", "no row " + std::to_string(o.row) +
                                                 " with p = " + std::to_string(o.order));
    }
  }
  const auto results = og6::classify_table(rows, o.bound);
  std::size_t matches = 0;
  bool undecided = false;
  Json r;
  r["command"] = "og6 classify";
  r["mode"] = o.table ? "table" : "row";
  Json jr = Json::array();
  std::ostringstream t;
  for (const auto& res : results) {
    matches += res.match ? 1 : 0;
    undecided = undecided || res.verdict.undecided;
    jr.push_back(verdict_json(res.row, res.verdict, res.match));
    t << verdict_text(res.row, res.verdict, res.match);
  }
  r["rows"] = jr;
  r["matched"] = matches;
  r["total"] = results.size();
  t << matches << "/" << results.size() << " rows match the expected flags\n";
  emit(o, r, t.str());
  if (matches != results.size()) return undecided ? kExitUndecided : kExitMismatch;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Even lattices, discriminant forms, gluings, and OG6 classification"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* cmd) {
    cmd->add_flag("--json", o.json, "machine-readable report");
  };

  auto* lattice = app.add_subcommand("lattice", "inspect a lattice expression");
  lattice->require_subcommand(1);
  auto* info = lattice->add_subcommand("info", "rank, signature, determinant, Gram matrix");
  info->add_option("expr", o.expr, "lattice expression")->required();
  add_common(info);
  auto* disc = lattice->add_subcommand("disc", "discriminant form and genus invariants");
  disc->add_option("expr", o.expr, "lattice expression")->required();
  add_common(disc);

  auto* embed = app.add_subcommand("embed", "gluing queries");
  embed->require_subcommand(1);
  auto* check = embed->add_subcommand("check", "gluings of M and N into an ambient genus");
  check->add_option("m", o.m_expr, "lattice M")->required();
  check->add_option("n", o.n_expr, "lattice N (orthogonal complement)")->required();
  check->add_option("ambient", o.ambient_expr, "ambient lattice L")->required();
  check->add_option("--bound", o.bound, "coordinate bound for norm -2 vectors")
      ->check(CLI::Range(1, 20));
  add_common(check);

  auto* og6cmd = app.add_subcommand("og6", "OG6 classification");
  og6cmd->require_subcommand(1);
  auto* classify = og6cmd->add_subcommand("classify", "classify invariant/coinvariant pairs");
  classify->add_flag("--table", o.table, "classify every row of the corpus");
  classify->add_option("--row", o.row, "classify one corpus row (numbered per group order)")
      ->check(CLI::PositiveNumber);
  classify->add_option("--order", o.order, "group order p")->check(CLI::IsMember({2, 3, 5, 7}));
  classify->add_option("--ns", o.ns_expr, "invariant lattice L^G");
  classify->add_option("--t", o.t_expr, "coinvariant lattice L_G");
  classify->add_option("--table-file", o.table_file, "corpus file");
  classify->add_option("--bound", o.bound, "witness search bound")->check(CLI::Range(1, 20));
  add_common(classify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (info->parsed()) return cmd_info(o);
    if (disc->parsed()) return cmd_disc(o);
    if (check->parsed()) return cmd_embed(o);
    if (classify->parsed()) return cmd_classify(o);
  } catch (const og6::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const og6::BruteForceLimit& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const og6::LatticeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
