#include "vartin/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>

#include "vartin/crystal.hpp"
#include "vartin/error.hpp"
#include "vartin/right_angled.hpp"
#include "vartin/selftest.hpp"

namespace vartin::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kNonSphericalDepth = 5;
constexpr int kOracleBound = 2;

struct Flags {
  std::optional<int> max_depth;
  std::optional<std::int64_t> cap;
  int bound = kOracleBound;
  std::uint64_t seed = SelftestOptions{}.seed;
  bool json = false;
  bool oracle = false;
};

struct Context {
  CoxeterGraph graph;
  RootSystem roots;
  std::optional<WGroupTable> table;
};

// Finite groups get the full root system and group table. Otherwise roots are
// enumerated to a depth bound.
Context load_context(const std::string& path, const Flags& f, std::int64_t root_cap,
                     std::int64_t w_cap) {
  CoxeterGraph g = load_graph(path);
  std::optional<WGroupTable> table;
  if (g.spherical_hint() != false) {
    try {
      table = enumerate_w(g, w_cap);
    } catch (const CapExceeded&) {
      if (g.spherical_hint() == true) throw;
    }
  }
  const int depth = f.max_depth ? *f.max_depth : (table ? -1 : kNonSphericalDepth);
  RootSystem rs = enumerate_roots(g, depth, root_cap);
  if (!rs.complete()) table.reset();
  return {std::move(g), std::move(rs), std::move(table)};
}

const WGroupTable& require_table(const Context& c, std::string_view what) {
  if (!c.table)
    throw Unsupported(std::string(what) + " needs a spherical graph with a complete root system");
  return *c.table;
}

std::string read_operand(const std::string& operand) {
  std::error_code ec;
  if (!operand.empty() && operand.front() != '{' && std::filesystem::is_regular_file(operand, ec)) {
    std::ifstream in(operand);
    if (!in) throw InvalidInput("cannot open '" + operand + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return operand;
}

Json vector_json(const ScalarVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json word_json(const CoxeterGraph& g, const VertexWord& w) {
  Json a = Json::array();
  for (Vertex s : w) a.push_back(g.name(s));
  return a;
}

std::string word_text(const CoxeterGraph& g, const VertexWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Vertex v : w) s += (s.empty() ? "" : " ") + g.name(v);
  return s;
}

// ---------------------------------------------------------------------------

int cmd_roots(const std::string& path, const Flags& f, std::ostream& out) {
  const Context c = load_context(path, f, f.cap.value_or(kDefaultRootCap), kDefaultWCap);
  const RootSystem& rs = c.roots;
  if (f.json) {
    Json doc;
    doc["vertices"] = c.graph.names();
    doc["positive_count"] = rs.positive_count();
    doc["complete"] = rs.complete();
    doc["max_depth"] = rs.max_depth();
    doc["roots"] = Json::array();
    for (RootIndex k = 1; k <= rs.positive_count(); ++k) {
      const Root& r = rs.root(k);
      doc["roots"].push_back({{"index", k},
                              {"depth", r.depth},
                              {"coeffs", vector_json(r.coeffs)},
                              {"word", word_json(c.graph, r.word)},
                              {"base", c.graph.name(r.base)}});
    }
    out << doc.dump(2) << '\n';
    return 0;
  }
  out << "positive roots: " << rs.positive_count() << " ("
      << (rs.complete() ? "complete" : "truncated at depth " + std::to_string(rs.max_depth()))
      << ")\n";
  for (RootIndex k = 1; k <= rs.positive_count(); ++k) {
    const Root& r = rs.root(k);
    out << "  " << k << "  depth " << r.depth << "  " << format_vector(r.coeffs) << "  = "
        << word_text(c.graph, r.word) << " . alpha_" << c.graph.name(r.base) << '\n';
  }
  return 0;
}

int cmd_check_rep(const std::string& path, const Flags& f, std::ostream& out) {
  const Context c = load_context(path, f, f.cap.value_or(kDefaultRootCap), kDefaultWCap);
  const VerifyScope scope =
      c.roots.complete() ? VerifyScope::Complete : VerifyScope::DihedralOrbits;
  const VerificationReport rep = verify_relations(c.roots, scope);
  if (f.json) {
    Json doc;
    doc["scope"] = scope == VerifyScope::Complete ? "complete" : "dihedral-orbits";
    doc["max_depth"] = c.roots.max_depth();
    doc["passed"] = rep.passed();
    doc["checks"] = Json::array();
    for (const auto& k : rep.checks) {
      Json j{{"family", k.relation.family}, {"s", c.graph.name(k.relation.s)}};
      j["t"] = k.relation.t >= 0 ? Json(c.graph.name(k.relation.t)) : Json(nullptr);
      j["orbits"] = k.orbits;
      j["roots"] = k.roots;
      j["passed"] = k.passed;
      j["counterexample"] = k.passed ? Json(nullptr) : Json(k.counterexample);
      doc["checks"].push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
  } else {
    out << format_report(c.graph, rep);
  }
  return rep.passed() ? 0 : 3;
}

int cmd_rewrite(const std::string& path, const std::string& word, const Flags& f,
                std::ostream& out) {
  const Context c = load_context(path, f, f.cap.value_or(kDefaultRootCap), kDefaultWCap);
  const VAWord w = parse_va_word(c.graph, read_operand(word));
  const RewriteResult r = rewrite(w, c.roots);
  const NormalForm& nf = r.form;
  std::set<RootIndex> used;
  for (const auto& z : nf.pure) used.insert(z.root);
  const PureVector ab = abelianize(nf.pure);
  if (f.json) {
    Json doc;
    doc["word"] = format_va_word(c.graph, w);
    doc["pure"] = zeta_tokens(nf.pure);
    doc["coxeter"] = word_json(c.graph, reduced_word(nf.coxeter));
    doc["abelianized"] = Json::object();
    for (auto [k, v] : ab.entries()) doc["abelianized"][std::to_string(k)] = v;
    doc["roots"] = Json::object();
    for (RootIndex k : used) doc["roots"][std::to_string(k)] = vector_json(r.roots.vector(k));
    out << doc.dump(2) << '\n';
    return 0;
  }
  out << "word:        " << format_va_word(c.graph, w) << '\n'
      << "pure part:   " << (nf.pure.empty() ? "1" : format_zeta_word(nf.pure)) << '\n'
      << "coxeter:     " << word_text(c.graph, reduced_word(nf.coxeter)) << '\n'
      << "abelianized: " << ab.str() << '\n';
  for (RootIndex k : used) out << "  z:" << k << "  " << format_vector(r.roots.vector(k)) << '\n';
  return 0;
}

std::string order_text(const MaybeOrder& o) { return o ? std::to_string(*o) : "infinite"; }

int cmd_order(const std::string& path, const std::string& elem, const Flags& f,
              std::ostream& out) {
  const Context c = load_context(path, f, kDefaultRootCap, kDefaultWCap);
  const CrystalElement e = parse_element(c.roots, read_operand(elem));
  const MaybeOrder o = order(c.roots, e, f.cap.value_or(kDefaultThetaCap));
  std::optional<MaybeOrder> check;
  if (f.oracle) {
    const WGroupTable& t = require_table(c, "the order oracle");
    check = oracle_order(c.roots, e, 2 * static_cast<std::int64_t>(t.order()) + 1);
  }
  if (f.json) {
    Json doc{{"finite", o.has_value()}};
    doc["order"] = o ? Json(*o) : Json(nullptr);
    if (check) doc["oracle"] = *check ? Json(**check) : Json(nullptr);
    out << doc.dump(2) << '\n';
  } else {
    out << "order: " << order_text(o) << '\n';
    if (check) out << "oracle: " << order_text(*check) << '\n';
  }
  return check && *check != o ? 3 : 0;
}

int cmd_conjugate(const std::string& path, const std::string& a, const std::string& b,
                  const Flags& f, std::ostream& out) {
  const Context c = load_context(path, f, kDefaultRootCap, f.cap.value_or(kDefaultWCap));
  const WGroupTable& t = require_table(c, "conjugate");
  const CrystalElement e1 = parse_element(c.roots, read_operand(a));
  const CrystalElement e2 = parse_element(c.roots, read_operand(b));
  const ConjugacyResult r = is_conjugate(c.roots, t, e1, e2);
  std::optional<bool> check;
  if (f.oracle) check = oracle_conjugate(c.roots, t, e1, e2, f.bound);
  if (f.json) {
    Json doc{{"conjugate", r.conjugate}};
    doc["witness"] = r.witness ? Json::parse(element_json(c.roots, *r.witness, &t)) : Json(nullptr);
    if (check) doc["oracle"] = *check;
    out << doc.dump(2) << '\n';
  } else {
    out << (r.conjugate ? "conjugate" : "not conjugate") << '\n';
    if (r.witness) out << "witness: " << element_json(c.roots, *r.witness, &t) << '\n';
    if (check)
      out << "oracle (bound " << f.bound << "): " << (*check ? "conjugate" : "not conjugate")
          << '\n';
  }
  return check && *check != r.conjugate ? 3 : 0;
}

int cmd_presentation(const std::string& path, const Flags& f, std::ostream& out) {
  const Context c = load_context(path, f, kDefaultRootCap, f.cap.value_or(kDefaultWCap));
  const Presentation p = pva_presentation(c.roots, require_table(c, "pva-presentation"));
  if (f.json) {
    Json doc{{"generators", p.generators}, {"relations", Json::array()}};
    for (const auto& [l, r] : p.relations) doc["relations"].push_back({l, r});
    out << doc.dump(2) << '\n';
  } else {
    out << p.str();
  }
  return 0;
}

SimpleGraph load_commutation(const std::string& path) {
  const std::string text = read_operand(path);
  try {
    return parse_simple_graph(text);
  } catch (const ParseError&) {
    // A right-angled Coxeter graph also determines the commuting pairs.
    return commutation_graph(parse_graph(text));
  }
}

int cmd_raag(const std::string& path, const Flags& f, std::ostream& out) {
  const SimpleGraph g = load_commutation(path);
  const LabeledGraph d = doubled_graph(g);
  const Presentation p = right_angled_presentation(g);
  const bool same = same_relations(p, graph_product_presentation(d));
  auto group = [](VertexGroup v) { return v == VertexGroup::Z ? "Z" : "Z2"; };
  if (f.json) {
    Json doc;
    doc["vertices"] = Json::array();
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
      doc["vertices"].push_back({{"name", d.vertices[i]}, {"group", group(d.groups[i])}});
    doc["edges"] = Json::array();
    for (auto [u, v] : d.edges) doc["edges"].push_back({d.vertices[u], d.vertices[v]});
    doc["relations"] = Json::array();
    for (const auto& [l, r] : p.relations) doc["relations"].push_back({l, r});
    doc["graph_product"] = same;
    out << doc.dump(2) << '\n';
  } else {
    out << "doubled graph: " << d.vertices.size() << " vertices, " << d.edges.size()
        << " edges\n";
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
      out << "  " << d.vertices[i] << "  " << group(d.groups[i]) << '\n';
    for (auto [u, v] : d.edges) out << "  " << d.vertices[u] << " -- " << d.vertices[v] << '\n';
    out << p.str() << "graph product presentation: " << (same ? "matches" : "differs") << '\n';
  }
  return same ? 0 : 3;
}

int cmd_selftest(const Flags& f, std::ostream& out) {
  const auto results = run_acceptance({f.seed});
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (f.json) {
    Json doc{{"seed", f.seed}, {"passed", ok}, {"criteria", Json::array()}};
    for (const auto& r : results)
      doc["criteria"].push_back(
          {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    out << doc.dump(2) << '\n';
  } else {
    out << format_results(results);
  }
  return ok ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Virtual Artin groups: root systems, representations, crystallographic quotients"};
  app.name("vartin");
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  Flags f;
  std::string graph, op1, op2;
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", f.json, "Machine-readable output"); };
  auto add_graph = [&](CLI::App* s) {
    s->add_option("graph", graph, "Coxeter graph JSON file")->required();
  };
  auto add_depth = [&](CLI::App* s) {
    s->add_option("--max-depth", f.max_depth, "Root depth bound (default: 5 unless spherical)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* roots = app.add_subcommand("roots", "Enumerate positive roots");
  add_graph(roots);
  add_depth(roots);
  roots->add_option("--cap", f.cap, "Maximum number of positive roots")->check(CLI::PositiveNumber);
  add_json(roots);

  auto* check = app.add_subcommand("check-rep", "Verify the defining relations under Psi");
  add_graph(check);
  add_depth(check);
  check->add_option("--cap", f.cap, "Maximum number of positive roots")->check(CLI::PositiveNumber);
  add_json(check);

  auto* rw = app.add_subcommand("rewrite", "Normal form of a word: pure part, then Coxeter part");
  add_graph(rw);
  rw->add_option("word", op1, "Word literal such as 'S:s T:t S:s^-1', or a file")->required();
  add_depth(rw);
  add_json(rw);

  auto* ord = app.add_subcommand("order", "Order of an element of the crystallographic quotient");
  add_graph(ord);
  ord->add_option("element", op1, "Element JSON file or literal")->required();
  add_depth(ord);
  ord->add_option("--cap", f.cap, "Cap on the order of the Coxeter part")->check(CLI::PositiveNumber);
  ord->add_flag("--oracle", f.oracle, "Also run repeated multiplication");
  add_json(ord);

  auto* conj = app.add_subcommand("conjugate", "Decide conjugacy of two elements");
  add_graph(conj);
  conj->add_option("first", op1, "Element JSON file or literal")->required();
  conj->add_option("second", op2, "Element JSON file or literal")->required();
  conj->add_option("--cap", f.cap, "Cap on |W|")->check(CLI::PositiveNumber);
  conj->add_option("--bound", f.bound, "Entry bound for the exhaustive oracle")
      ->check(CLI::NonNegativeNumber);
  conj->add_flag("--oracle", f.oracle, "Also run the exhaustive search");
  add_json(conj);

  auto* pres = app.add_subcommand("pva-presentation", "Presentation of the pure subgroup");
  add_graph(pres);
  pres->add_option("--cap", f.cap, "Cap on |W|")->check(CLI::PositiveNumber);
  add_json(pres);

  auto* raag = app.add_subcommand("raag", "Doubled graph and presentation of the right-angled case");
  add_graph(raag);
  add_json(raag);

  auto* self = app.add_subcommand("selftest", "Run the acceptance suite on the bundled corpus");
  self->add_option("--seed", f.seed, "Seed for the sampled checks");
  add_json(self);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (roots->parsed()) return cmd_roots(graph, f, out);
    if (check->parsed()) return cmd_check_rep(graph, f, out);
    if (rw->parsed()) return cmd_rewrite(graph, op1, f, out);
    if (ord->parsed()) return cmd_order(graph, op1, f, out);
    if (conj->parsed()) return cmd_conjugate(graph, op1, op2, f, out);
    if (pres->parsed()) return cmd_presentation(graph, f, out);
    if (raag->parsed()) return cmd_raag(graph, f, out);
    if (self->parsed()) return cmd_selftest(f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}

}  // namespace vartin::cli
