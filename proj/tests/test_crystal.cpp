#include <doctest.h>

#include "support.hpp"
#include "vartin/error.hpp"

using namespace vartin;

namespace {

PureVector pv(std::map<RootIndex, Coeff> m) { return PureVector(std::move(m)); }

CrystalElement el(const RootSystem& rs, std::map<RootIndex, Coeff> m, VertexWord w) {
  return {pv(std::move(m)), word_element(rs.graph(), w)};
}

CrystalElement conj(const RootSystem& rs, const CrystalElement& g, const CrystalElement& e) {
  return multiply(rs, multiply(rs, g, e), inverse(rs, g));
}

}  // namespace

TEST_CASE("elements from words") {
  const fixture::Finite a1("A1");
  const auto& g = a1.graph;
  CHECK(from_word(a1.roots, parse_va_word(g, "T:s S:s")) == el(a1.roots, {{1, 1}}, {}));
  CHECK(from_word(a1.roots, parse_va_word(g, "T:s")) == el(a1.roots, {}, {0}));
  CHECK(from_word(a1.roots, parse_va_word(g, "S:s S:s^-1")) == crystal_identity(a1.roots));
  CHECK(coxeter_element(a1.roots, {0, 0}) == crystal_identity(a1.roots));
  const auto aff = corpus_graph("affine-A2");
  CHECK_THROWS_AS(from_word(enumerate_roots(aff, 0), parse_va_word(aff, "T:t S:s")), TruncationError);
}

TEST_CASE("semidirect multiplication") {
  const fixture::Finite a1("A1");
  const auto& rs = a1.roots;
  CHECK(multiply(rs, el(rs, {{1, 1}}, {}), el(rs, {{1, 1}}, {})) == el(rs, {{1, 2}}, {}));
  const auto s = el(rs, {}, {0});
  CHECK(multiply(rs, multiply(rs, s, el(rs, {{1, 1}}, {})), s) == el(rs, {{-1, 1}}, {}));

  Rng rng(31);
  for (const char* name : {"A2", "B2", "A3"}) {
    const fixture::Finite f(name);
    for (int i = 0; i < 200; ++i) {
      const auto a = random_crystal_element(rng, f.roots, f.table, 3, 4, false);
      const auto b = random_crystal_element(rng, f.roots, f.table, 3, 4, false);
      const auto c = random_crystal_element(rng, f.roots, f.table, 3, 4, false);
      CHECK(multiply(f.roots, a, inverse(f.roots, a)) == crystal_identity(f.roots));
      CHECK(multiply(f.roots, inverse(f.roots, a), a) == crystal_identity(f.roots));
      CHECK(multiply(f.roots, multiply(f.roots, a, b), c) ==
            multiply(f.roots, a, multiply(f.roots, b, c)));
      CHECK(multiply(f.roots, a, b).theta == a.theta * b.theta);
      // Conjugating a single root vector by (0, theta) moves it to rho(theta) beta.
      const auto all = f.roots.all_indices();
      const RootIndex k = all[uniform(rng, 0, static_cast<int>(all.size()) - 1)];
      const CrystalElement th{PureVector{}, a.theta};
      CHECK(conj(f.roots, th, el(f.roots, {{k, 1}}, {})) ==
            el(f.roots, {{act_on_root(f.roots, a.theta, k), 1}}, {}));
    }
  }
}

TEST_CASE("from_word is a homomorphism") {
  Rng rng(32);
  const fixture::Finite b2("B2");
  for (int i = 0; i < 200; ++i) {
    const auto u = random_va_word(rng, b2.graph, 8), v = random_va_word(rng, b2.graph, 8);
    VAWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(from_word(b2.roots, uv) ==
          multiply(b2.roots, from_word(b2.roots, u), from_word(b2.roots, v)));
  }
}

TEST_CASE("orders") {
  const fixture::Finite a1("A1");
  const auto& rs = a1.roots;
  CHECK(order(rs, el(rs, {{1, 1}, {-1, -1}}, {0})) == 2);
  CHECK_FALSE(order(rs, el(rs, {{1, 1}}, {0})).has_value());
  CHECK_FALSE(order(rs, el(rs, {{1, 1}}, {})).has_value());
  CHECK(order(rs, crystal_identity(rs)) == 1);
  CHECK(oracle_order(rs, crystal_identity(rs), 1) == 1);
  CHECK(oracle_order(rs, el(rs, {{1, 1}, {-1, -1}}, {0}), 5) == 2);

  const fixture::Finite b2("B2");
  for (std::size_t i = 0; i < b2.table.order(); ++i) {
    const CrystalElement e{PureVector{}, b2.table[i]};
    CHECK(order(b2.roots, e) == w_order(b2.table[i], 100));
  }
}

TEST_CASE("orders on the affine graph") {
  const auto g = corpus_graph("affine-A2");
  auto rs = enumerate_roots(g, 2);
  const auto s = word_element(g, {0});
  // beta and rho(s) beta with opposite entries, rho(s) beta past the depth bound.
  RootIndex b = 1;
  while (rs.find(s.apply(rs.vector(b)))) ++b;
  const auto [w, base] = rs.discovery(b);
  VertexWord sw{0};
  sw.insert(sw.end(), w.begin(), w.end());
  const RootIndex sb = materialize(rs, s.apply(rs.vector(b)), sw, base);
  CHECK(rs.root(sb).depth == 3);
  CHECK(order(rs, {pv({{b, 1}, {sb, -1}}), s}) == 2);
  CHECK_FALSE(order(rs, {pv({{b, 1}}), s}).has_value());
  CHECK_THROWS_AS(order(rs, {PureVector{}, word_element(g, {0, 1, 2})}, 500), CapExceeded);
  // rho(st) has order 3; its orbits leave the depth-2 system.
  const auto st = word_element(g, {0, 1});
  CHECK(order(rs, {pv({{b, 1}}), st}) == std::nullopt);
  CHECK(order(rs, {PureVector{}, st}) == 3);
}

TEST_CASE("orbit decomposition") {
  const fixture::Finite a2("A2");
  const auto theta = word_element(a2.graph, {0, 1});
  const auto orbits = orbit_decomposition(a2.roots, theta, a2.roots.all_indices(),
                                          pv({{1, 2}, {-3, 1}}));
  REQUIRE(orbits.size() == 2);
  for (const auto& o : orbits) {
    CHECK(o.members.size() == 3);
    for (std::size_t j = 0; j + 1 < o.members.size(); ++j)
      CHECK(act_on_root(a2.roots, theta, o.members[j]) == o.members[j + 1]);
  }
  CHECK(orbits[0].sum + orbits[1].sum == 3);
}

TEST_CASE("conjugacy examples") {
  const fixture::Finite a1("A1");
  const auto& rs = a1.roots;
  const auto e1 = el(rs, {{1, 1}}, {}), e2 = el(rs, {{-1, 1}}, {});
  const auto r = is_conjugate(rs, a1.table, e1, e2);
  REQUIRE(r.conjugate);
  CHECK(conj(rs, *r.witness, e2) == e1);
  CHECK(conj(rs, el(rs, {}, {0}), e2) == e1);
  CHECK(oracle_conjugate(rs, a1.table, e1, e2, 1));
  CHECK_FALSE(is_conjugate(rs, a1.table, e1, el(rs, {{1, 2}}, {})).conjugate);
  CHECK_FALSE(oracle_conjugate(rs, a1.table, e1, el(rs, {{1, 2}}, {}), 3));
  const auto self = is_conjugate(rs, a1.table, e1, e1);
  REQUIRE(self.conjugate);
  CHECK(conj(rs, *self.witness, e1) == e1);

  const fixture::Finite a2("A2");
  // Coxeter parts in different classes are never conjugate.
  CHECK_FALSE(is_conjugate(a2.roots, a2.table, el(a2.roots, {}, {0}), el(a2.roots, {}, {0, 1})).conjugate);
  CHECK(is_conjugate(a2.roots, a2.table, el(a2.roots, {}, {0}), el(a2.roots, {}, {1})).conjugate);
}

TEST_CASE("conjugacy agrees with exhaustive search") {
  Rng rng(33);
  for (const char* name : {"A1xA1", "B2"}) {
    const std::string label = name;
    CAPTURE(label);
    const fixture::Finite f(name);
    for (int i = 0; i < 150; ++i) {
      const auto e1 = random_crystal_element(rng, f.roots, f.table, 1, 2, false);
      CrystalElement e2 = random_crystal_element(rng, f.roots, f.table, 1, 2, false);
      if (i % 2 == 0) e2 = conj(f.roots, random_crystal_element(rng, f.roots, f.table, 1, 1, false), e1);
      const auto r = is_conjugate(f.roots, f.table, e1, e2);
      CHECK(r.conjugate == oracle_conjugate(f.roots, f.table, e1, e2, 2));
      if (r.conjugate) CHECK(conj(f.roots, *r.witness, e2) == e1);
    }
  }
}

TEST_CASE("pure conjugation preserves orbit sums") {
  Rng rng(34);
  const fixture::Finite a3("A3");
  for (int i = 0; i < 100; ++i) {
    const auto e = random_crystal_element(rng, a3.roots, a3.table, 2, 4, false);
    const auto p = random_crystal_element(rng, a3.roots, a3.table, 2, 4, false).pure;
    const auto c = conj(a3.roots, {p, WElement::identity(a3.graph)}, e);
    CHECK(c.theta == e.theta);
    const auto all = a3.roots.all_indices();
    const auto before = orbit_decomposition(a3.roots, e.theta, all, e.pure);
    const auto after = orbit_decomposition(a3.roots, e.theta, all, c.pure);
    REQUIRE(before.size() == after.size());
    for (std::size_t k = 0; k < before.size(); ++k) CHECK(before[k].sum == after[k].sum);
  }
}

TEST_CASE("conjugacy and oracle preconditions") {
  const auto aff = enumerate_roots(corpus_graph("affine-A2"), 2);
  const fixture::Finite a2("A2");
  const auto id = crystal_identity(aff);
  CHECK_THROWS_AS(is_conjugate(aff, a2.table, id, id), Unsupported);
  CHECK_THROWS_AS(oracle_conjugate(aff, a2.table, id, id, 1), Unsupported);
  CHECK_THROWS_AS(holonomy(aff, id.theta), Unsupported);
  const auto e = el(a2.roots, {{1, 1}}, {});
  CHECK_THROWS_AS(oracle_conjugate(a2.roots, a2.table, e, e, -1), InvalidInput);
  const fixture::Finite a3("A3");
  CHECK_THROWS_AS(oracle_conjugate(a3.roots, a3.table, el(a3.roots, {{1, 1}}, {}),
                                   el(a3.roots, {{1, 1}}, {}), 30),
                  CapExceeded);
}

TEST_CASE("holonomy") {
  const fixture::Finite a1("A1");
  CHECK(holonomy(a1.roots, WElement::identity(a1.graph)).is_identity());
  const auto h = holonomy(a1.roots, simple_reflection(a1.graph, 0));
  CHECK(h(1) == -1);
  CHECK(h(-1) == 1);
  for (const char* name : fixture::kSpherical) {
    const fixture::Finite f(name);
    CHECK(holonomy_faithful(f.roots, f.table));
  }
}

TEST_CASE("element documents") {
  const fixture::Finite a2("A2");
  const auto& rs = a2.roots;
  const auto e = parse_element(rs, R"({"pure":{"1":2,"-3":-1},"coxeter":["s","t"]})");
  CHECK(e == el(rs, {{1, 2}, {-3, -1}}, {0, 1}));
  CHECK(element_json(rs, e) == R"({"pure":{"-3":-1,"1":2},"coxeter":["s","t"]})");
  CHECK(parse_element(rs, element_json(rs, e)) == e);
  CHECK(element_json(rs, el(rs, {}, {0, 1, 1, 0, 1}), &a2.table) == R"({"pure":{},"coxeter":["t"]})");
  CHECK(element_json(rs, el(rs, {}, {0, 1, 1, 0, 1})) == R"({"pure":{},"coxeter":["t"]})");
  CHECK(parse_element(rs, "{}") == crystal_identity(rs));
  CHECK_THROWS_AS(parse_element(rs, R"({"pure":{"4":1}})"), ParseError);
  CHECK_THROWS_AS(parse_element(rs, R"({"pure":{"0":1}})"), ParseError);
  CHECK_THROWS_AS(parse_element(rs, R"({"pure":{"x":1}})"), ParseError);
  CHECK_THROWS_AS(parse_element(rs, R"({"pure":{"1":1.5}})"), ParseError);
  CHECK_THROWS_AS(parse_element(rs, R"({"pure":[1]})"), ParseError);
  CHECK_THROWS_AS(parse_element(rs, R"({"coxeter":["q"]})"), InvalidInput);
  CHECK_THROWS_AS(parse_element(rs, R"({"coxeter":[1]})"), ParseError);
  CHECK_THROWS_AS(parse_element(rs, R"({"pure":)"), ParseError);
  CHECK_THROWS_AS(parse_element(rs, "[]"), ParseError);
  CHECK_THROWS_AS(load_element(rs, "/nonexistent.json"), InvalidInput);
  const fixture::Finite a1("A1");
  CHECK(load_element(a1.roots, fixture::data("examples/a1_order2.json")) ==
        el(a1.roots, {{1, 1}, {-1, -1}}, {0}));
}
