#include "vartin/selftest.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "vartin/corpus.hpp"
#include "vartin/error.hpp"
#include "vartin/right_angled.hpp"

namespace vartin {

int uniform(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

VAWord random_va_word(Rng& rng, const CoxeterGraph& g, int max_len) {
  VAWord w(uniform(rng, 0, max_len));
  for (auto& t : w) t = {static_cast<Gen>(uniform(rng, 0, 2)), uniform(rng, 0, g.size() - 1)};
  return w;
}

VertexWord random_vertex_word(Rng& rng, const CoxeterGraph& g, int max_len) {
  VertexWord w(uniform(rng, 0, max_len));
  for (auto& s : w) s = uniform(rng, 0, g.size() - 1);
  return w;
}

CrystalElement random_crystal_element(Rng& rng, const RootSystem& rs,
                                      const WGroupTable& table, int bound,
                                      int max_support, bool torsion) {
  const auto all = rs.all_indices();
  const WElement& theta = table[uniform(rng, 0, static_cast<int>(table.order()) - 1)];
  PureVector a;
  auto pick = [&] { return all[uniform(rng, 0, static_cast<int>(all.size()) - 1)]; };
  auto nonzero = [&] {
    int v = uniform(rng, 1, bound);
    return uniform(rng, 0, 1) ? v : -v;
  };
  auto fits = [&](RootIndex k, Coeff v) {
    const Coeff nv = a[k] + v;
    return nv >= -bound && nv <= bound;
  };
  if (torsion) {
    const auto t = *w_order(theta, 2 * static_cast<std::int64_t>(table.order()));
    const int pairs = uniform(rng, 0, max_support / 2);
    for (int i = 0; i < pairs && t > 1; ++i) {
      const RootIndex b = pick();
      RootIndex c = b;
      for (int j = uniform(rng, 1, static_cast<int>(t) - 1); j > 0; --j)
        c = act_on_root(rs, theta, c);
      const Coeff v = nonzero();
      if (b == c || !fits(b, v) || !fits(c, -v)) continue;
      if (a.support().size() + 2 > static_cast<std::size_t>(max_support)) break;
      a.add(b, v);
      a.add(c, -v);
    }
  } else {
    const int k = uniform(rng, 0, max_support);
    for (int i = 0; i < k; ++i) {
      const RootIndex b = pick();
      const Coeff v = nonzero();
      if (a[b] != 0 || !fits(b, v)) continue;
      a.add(b, v);
    }
  }
  return {std::move(a), theta};
}

namespace {

using Clock = std::chrono::steady_clock;

// Runtime bounds, in seconds.
constexpr double kRootsBound = 1.0;        // per graph
constexpr double kCheckRepBound = 10.0;    // whole corpus
constexpr double kTorsionBound = 30.0;     // whole criterion
constexpr int kAffineDepth = 5;
constexpr int kWordSamples = 500;
constexpr int kMaxTauWord = 8;
constexpr int kMaxVAWord = 12;
constexpr int kCrystalSamples = 500;
constexpr int kConjugacyPairs = 200;
constexpr int kOracleBound = 2;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Spherical {
  std::string name;
  CoxeterGraph graph;
  RootSystem roots;
  WGroupTable table;
};

std::vector<Spherical> spherical_corpus() {
  std::vector<Spherical> out;
  for (const auto& e : corpus()) {
    if (!e.spherical) continue;
    auto g = parse_graph(e.document);
    auto rs = enumerate_roots(g);
    auto t = enumerate_w(g);
    out.push_back({std::string(e.name), g, std::move(rs), std::move(t)});
  }
  return out;
}

const Spherical& find(const std::vector<Spherical>& c, std::string_view name) {
  for (const auto& s : c)
    if (s.name == name) return s;
  throw InternalError("missing corpus graph");
}

class Detail {
 public:
  void fail(const std::string& msg) {
    if (failures_++ < 4) out_ << (out_.tellp() > 0 ? "; " : "") << msg;
  }
  void note(const std::string& msg) { notes_ << (notes_.tellp() > 0 ? "; " : "") << msg; }
  bool ok() const { return failures_ == 0; }
  std::string str() const {
    std::string s = notes_.str();
    if (failures_) s += (s.empty() ? "" : " | ") + std::to_string(failures_) + " failures: " + out_.str();
    return s;
  }

 private:
  int failures_ = 0;
  std::ostringstream out_, notes_;
};

CriterionResult criterion_roots() {
  Detail d;
  const std::map<std::string, int> expected{{"A1", 1},    {"A2", 3},    {"B2", 4}, {"I2(5)", 5},
                                            {"I2(6)", 6}, {"A1xA1", 2}, {"A3", 6}};
  for (const auto& [name, count] : expected) {
    const auto g = corpus_graph(name);
    const auto t0 = Clock::now();
    const auto rs = enumerate_roots(g);
    const double dt = since(t0);
    const auto table = enumerate_w(g);
    const auto l0 = static_cast<int>(table[table.longest()].word().size());
    if (!rs.complete()) d.fail(name + " not complete");
    if (rs.positive_count() != count)
      d.fail(name + " has " + std::to_string(rs.positive_count()) + " positive roots");
    if (rs.total_count() != 2 * l0) d.fail(name + ": |Phi| != 2 l(w0)");
    if (dt >= kRootsBound) d.fail(name + " took " + std::to_string(dt) + " s");
  }
  d.note("7 graphs, |Phi+| = l(w0) cross-checked");
  return {1, "root systems", d.ok(), d.str()};
}

CriterionResult criterion_coxeter() {
  Detail d;
  const std::map<std::string, std::size_t> expected{
      {"A1", 2}, {"A2", 6}, {"B2", 8}, {"I2(5)", 10}, {"I2(6)", 12}, {"A1xA1", 4}, {"A3", 24}};
  for (const auto& [name, order] : expected) {
    const auto t = enumerate_w(corpus_graph(name));
    if (t.order() != order) d.fail(name + " |W| = " + std::to_string(t.order()));
  }
  bool capped = false;
  try {
    enumerate_w(corpus_graph("affine-A2"), kDefaultWCap);
  } catch (const CapExceeded&) {
    capped = true;
  }
  if (!capped) d.fail("affine A2 closed within the cap");
  const auto affine = enumerate_roots(corpus_graph("affine-A2"), 40);
  if (affine.complete()) d.fail("affine A2 roots closed");
  d.note("affine A2 exceeds cap " + std::to_string(kDefaultWCap));
  return {2, "Coxeter enumeration", d.ok(), d.str()};
}

CriterionResult criterion_check_rep() {
  Detail d;
  const auto t0 = Clock::now();
  int relations = 0, failed = 0;
  for (const auto& e : corpus()) {
    const auto g = parse_graph(e.document);
    const auto rs = enumerate_roots(g, e.spherical ? -1 : kAffineDepth);
    const auto rep =
        verify_relations(rs, e.spherical ? VerifyScope::Complete : VerifyScope::DihedralOrbits);
    relations += static_cast<int>(rep.checks.size());
    for (const auto& c : rep.checks) {
      if (c.passed) continue;
      ++failed;
      std::string pair = g.name(c.relation.s) + (c.relation.t >= 0 ? "," + g.name(c.relation.t) : "");
      d.fail(std::string(e.name) + " " + c.relation.family + " " + pair + ": " + c.counterexample);
    }
  }
  const double dt = since(t0);
  if (dt >= kCheckRepBound) d.fail("took " + std::to_string(dt) + " s");
  d.note(std::to_string(relations - failed) + "/" + std::to_string(relations) +
         " relation checks hold");
  return {3, "representation well-definedness", d.ok(), d.str()};
}

CriterionResult criterion_diagonal(const std::vector<Spherical>& c) {
  Detail d;
  int checked = 0;
  for (const auto& s : c) {
    const auto basis = full_basis(s.roots);
    for (RootIndex beta : s.roots.all_indices()) {
      const auto m = psi_word(s.roots, basis, expand_zeta(s.roots, beta));
      ++checked;
      if (!m.is_diagonal()) {
        d.fail(s.name + " zeta " + std::to_string(beta) + " not diagonal");
        continue;
      }
      for (int i = 0; i < m.size(); ++i) {
        const int want = basis->root(i) == std::abs(beta) ? 1 : 0;
        if (m.monomial(i).xe != want) d.fail(s.name + " zeta " + std::to_string(beta) + " x misplaced");
      }
      if (!(m == zeta_image(s.roots, basis, beta)))
        d.fail(s.name + " zeta " + std::to_string(beta) + " differs from closed form");
    }
  }
  d.note(std::to_string(checked) + " roots");
  return {4, "diagonality and closed form", d.ok(), d.str()};
}

CriterionResult criterion_kappa_identities(Rng& rng) {
  Detail d;
  long checks = 0;
  for (const auto& e : corpus()) {
    const auto g = parse_graph(e.document);
    const auto rs = enumerate_roots(g, e.spherical ? -1 : kAffineDepth);
    for (int i = 0; i < kWordSamples; ++i) {
      const VertexWord w = random_vertex_word(rng, g, kMaxTauWord);
      const VertexWord rev(w.rbegin(), w.rend());
      const Vertex s = uniform(rng, 0, g.size() - 1);
      for (RootIndex k = 1; k <= rs.positive_count(); ++k) {
        const ScalarVector beta = rs.vector(k);
        if (epsilon(g, s, beta) != -epsilon(g, s, reflect_simple(g, s, beta)))
          d.fail(std::string(e.name) + " epsilon antisymmetry");
        const ScalarVector img = apply_word(g, w, beta);
        const bool inverted = root_sign(img) == Sign::Negative;
        const ScalarVector pos = inverted ? negated(img) : img;
        const auto lhs = kappa(g, w, beta), rhs = -kappa(g, rev, pos);
        if (!inverted && lhs != rhs) d.fail(std::string(e.name) + " kappa reversal");
        if (lhs != rhs) d.fail(std::string(e.name) + " kappa inverse");
        checks += 3;
      }
    }
  }
  d.note(std::to_string(checks) + " identity evaluations");
  return {5, "epsilon and kappa identities", d.ok(), d.str()};
}

CriterionResult criterion_kappa_braid() {
  Detail d;
  int checks = 0;
  for (const auto& e : corpus()) {
    const auto g = parse_graph(e.document);
    const auto rs = enumerate_roots(g, e.spherical ? -1 : kAffineDepth);
    for (auto [s, t] : g.finite_pairs()) {
      const int m = g.label(s, t).value();
      const VertexWord w1 = prod_r(t, s, m), w2 = prod_r(s, t, m);
      std::set<RootIndex> covered;
      for (RootIndex k = 1; k <= rs.positive_count(); ++k) {
        if (covered.count(k)) continue;
        const auto orbit = dihedral_orbit(rs, s, t, k);
        for (RootIndex j : orbit.members) {
          if (j < 0) continue;
          covered.insert(j);
          const auto beta = orbit.roots.vector(j);
          ++checks;
          if (kappa(g, w1, beta) != kappa(g, w2, beta))
            d.fail(std::string(e.name) + " kappa differs on " + format_vector(beta));
        }
      }
    }
  }
  d.note(std::to_string(checks) + " orbit roots");
  return {6, "kappa well-definedness", d.ok(), d.str()};
}

CriterionResult criterion_rank(const std::vector<Spherical>& c) {
  Detail d;
  int relations = 0;
  for (const auto& s : c) {
    const auto all = s.roots.all_indices();
    std::set<std::map<RootIndex, Coeff>> vecs;
    for (RootIndex b : all) vecs.insert(abelianize(ZetaWord{{b, 1}}).entries());
    if (vecs.size() != all.size()) d.fail(s.name + " generator vectors collide");
    const MhatTable mh(s.roots, s.table);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i == j || mh.at(all[i], all[j]).is_infinite()) continue;
        const auto [l, r] = pva_relation(s.roots, mh, all[i], all[j]);
        ++relations;
        if (!(abelianize(l) - abelianize(r)).is_zero())
          d.fail(s.name + " relation does not abelianize to zero");
      }
    const auto basis = full_basis(s.roots);
    std::vector<MonomialMatrix> images;
    for (RootIndex b : all) images.push_back(zeta_image(s.roots, basis, b));
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        if (all[i] != -all[j] && images[i] == images[j])
          d.fail(s.name + " zeta images of " + std::to_string(all[i]) + ", " +
                 std::to_string(all[j]) + " coincide");
  }
  d.note(std::to_string(relations) + " relations abelianized");
  return {7, "free abelian rank", d.ok(), d.str()};
}

CriterionResult criterion_holonomy(const std::vector<Spherical>& c) {
  Detail d;
  for (const auto& s : c)
    if (!holonomy_faithful(s.roots, s.table)) d.fail(s.name + " holonomy not faithful");
  d.note(std::to_string(c.size()) + " graphs scanned");
  return {8, "holonomy faithfulness", d.ok(), d.str()};
}

CriterionResult criterion_torsion(const std::vector<Spherical>& c, Rng& rng) {
  Detail d;
  const auto t0 = Clock::now();
  int finite = 0, total = 0;
  for (const char* name : {"A2", "B2"}) {
    const auto& s = find(c, name);
    const std::int64_t cap = 2 * static_cast<std::int64_t>(s.table.order()) + 1;
    for (int i = 0; i < kCrystalSamples; ++i) {
      const auto e = random_crystal_element(rng, s.roots, s.table, 2, 4, i % 2 == 0);
      const auto a = order(s.roots, e), b = oracle_order(s.roots, e, cap);
      ++total;
      finite += a.has_value();
      if (a != b)
        d.fail(std::string(name) + " " + element_json(s.roots, e, &s.table) + ": criterion " +
               (a ? std::to_string(*a) : "inf") + " vs oracle " + (b ? std::to_string(*b) : "inf"));
    }
  }
  const double dt = since(t0);
  if (dt >= kTorsionBound) d.fail("took " + std::to_string(dt) + " s");
  d.note(std::to_string(total) + " elements, " + std::to_string(finite) + " of finite order");
  return {9, "torsion criterion", d.ok(), d.str()};
}

CriterionResult criterion_conjugacy(const std::vector<Spherical>& c, Rng& rng) {
  Detail d;
  int yes = 0, pairs = 0;
  auto check = [&](const Spherical& s, const CrystalElement& e1, const CrystalElement& e2) {
    const auto r = is_conjugate(s.roots, s.table, e1, e2);
    const bool o = oracle_conjugate(s.roots, s.table, e1, e2, kOracleBound);
    ++pairs;
    if (r.conjugate != o)
      d.fail(s.name + " " + element_json(s.roots, e1) + " vs " + element_json(s.roots, e2));
    if (r.conjugate) {
      ++yes;
      const auto& g = *r.witness;
      if (!(multiply(s.roots, multiply(s.roots, g, e2), inverse(s.roots, g)) == e1))
        d.fail(s.name + " witness does not verify");
    }
  };
  // A1: every pure vector with entries in [-2, 2], both theta.
  const auto& a1 = find(c, "A1");
  std::vector<CrystalElement> grid;
  for (std::size_t t = 0; t < a1.table.order(); ++t)
    for (int p = -2; p <= 2; ++p)
      for (int q = -2; q <= 2; ++q)
        grid.push_back({PureVector(std::map<RootIndex, Coeff>{{1, p}, {-1, q}}), a1.table[t]});
  for (const auto& e1 : grid)
    for (const auto& e2 : grid) check(a1, e1, e2);
  // A2: conjugates by construction, perturbed conjugates, independent pairs.
  const auto& a2 = find(c, "A2");
  for (int i = 0; i < kConjugacyPairs; ++i) {
    const auto e1 = random_crystal_element(rng, a2.roots, a2.table, 1, 2, false);
    CrystalElement e2;
    switch (i % 3) {
      case 0:
      case 1: {
        const auto g = random_crystal_element(rng, a2.roots, a2.table, 1, 1, false);
        e2 = multiply(a2.roots, multiply(a2.roots, g, e1), inverse(a2.roots, g));
        if (i % 3 == 1) {
          const auto all = a2.roots.all_indices();
          e2.pure.add(all[uniform(rng, 0, static_cast<int>(all.size()) - 1)], uniform(rng, 0, 1) ? 1 : -1);
        }
        break;
      }
      default:
        e2 = random_crystal_element(rng, a2.roots, a2.table, 1, 2, false);
    }
    check(a2, e1, e2);
  }
  d.note(std::to_string(pairs) + " pairs, " + std::to_string(yes) + " conjugate");
  return {10, "conjugacy criterion", d.ok(), d.str()};
}

CriterionResult criterion_rewrite(const std::vector<Spherical>& c, Rng& rng) {
  Detail d;
  int psi_ok = 0, pi_ok = 0, total = 0;
  for (const auto& s : c) {
    const auto basis = full_basis(s.roots);
    int graph_psi = 0;
    for (int i = 0; i < kWordSamples; ++i) {
      const VAWord w = random_va_word(rng, s.graph, kMaxVAWord);
      const auto r = rewrite(w, s.roots);
      ++total;
      const bool psi = psi_word(s.roots, basis, w) ==
                       psi_word(s.roots, basis, expand_normal_form(s.roots, r.form));
      const bool pi = word_element(s.graph, coxeter_projection(w)) == r.form.coxeter;
      psi_ok += psi;
      graph_psi += psi;
      pi_ok += pi;
      if (!pi) d.fail(s.name + " projection mismatch on " + format_va_word(s.graph, w));
    }
    if (graph_psi != kWordSamples)
      d.fail(s.name + " Psi agrees on " + std::to_string(graph_psi) + "/" +
             std::to_string(kWordSamples) + " words");
  }
  d.note("Psi " + std::to_string(psi_ok) + "/" + std::to_string(total) + ", pi_P " +
         std::to_string(pi_ok) + "/" + std::to_string(total));
  return {11, "rewriting soundness", d.ok(), d.str()};
}

CriterionResult criterion_right_angled() {
  Detail d;
  const SimpleGraph p3{{"s", "t", "u"}, {{0, 1}, {1, 2}}};
  const auto dg = doubled_graph(p3);
  constexpr std::size_t kExpectedVertices = 6, kExpectedEdges = 12;
  if (dg.vertices.size() != kExpectedVertices)
    d.fail(std::to_string(dg.vertices.size()) + " vertices");
  if (dg.edges.size() != kExpectedEdges)
    d.fail("doubled graph has " + std::to_string(dg.edges.size()) + " edges, expected " +
           std::to_string(kExpectedEdges));
  for (std::size_t i = 0; i < dg.vertices.size(); ++i)
    if (dg.groups[i] != (i % 2 == 0 ? VertexGroup::Z : VertexGroup::Z2)) d.fail("wrong vertex label");
  const bool same = same_relations(right_angled_presentation(p3), graph_product_presentation(dg));
  if (!same) d.fail("presentation differs from the graph product");
  d.note(std::string("presentation ") + (same ? "matches" : "differs") +
         " the graph product relation-for-relation");
  return {12, "right-angled constructions", d.ok(), d.str()};
}

CriterionResult guarded(int id, const std::string& title,
                        const std::function<CriterionResult()>& f) {
  const auto t0 = Clock::now();
  CriterionResult r;
  try {
    r = f();
  } catch (const std::exception& e) {
    r = {id, title, false, std::string("exception: ") + e.what()};
  }
  r.seconds = since(t0);
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts) {
  Rng rng(opts.seed);
  const auto c = spherical_corpus();
  std::vector<CriterionResult> out;
  out.push_back(guarded(1, "root systems", criterion_roots));
  out.push_back(guarded(2, "Coxeter enumeration", criterion_coxeter));
  out.push_back(guarded(3, "representation well-definedness", criterion_check_rep));
  out.push_back(guarded(4, "diagonality and closed form", [&] { return criterion_diagonal(c); }));
  out.push_back(guarded(5, "epsilon and kappa identities", [&] { return criterion_kappa_identities(rng); }));
  out.push_back(guarded(6, "kappa well-definedness", criterion_kappa_braid));
  out.push_back(guarded(7, "free abelian rank", [&] { return criterion_rank(c); }));
  out.push_back(guarded(8, "holonomy faithfulness", [&] { return criterion_holonomy(c); }));
  out.push_back(guarded(9, "torsion criterion", [&] { return criterion_torsion(c, rng); }));
  out.push_back(guarded(10, "conjugacy criterion", [&] { return criterion_conjugacy(c, rng); }));
  out.push_back(guarded(11, "rewriting soundness", [&] { return criterion_rewrite(c, rng); }));
  out.push_back(guarded(12, "right-angled constructions", criterion_right_angled));
  return out;
}

std::string format_results(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  int passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << " (" << r.title << ")  ";
    out.setf(std::ios::fixed);
    out.precision(3);
    out << r.seconds << " s  " << r.detail << '\n';
    passed += r.passed;
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return out.str();
}

}  // namespace vartin
