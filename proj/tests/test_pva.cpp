#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "vartin/error.hpp"

using namespace vartin;

namespace {

VAWord word(const CoxeterGraph& g, std::string_view text) { return parse_va_word(g, text); }

VAWord concat(std::initializer_list<VAWord> parts) {
  VAWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

TEST_CASE("rewrite examples") {
  const fixture::Finite a2("A2");
  const auto& g = a2.graph;

  auto r = rewrite(word(g, "T:s S:s"), a2.roots);
  CHECK(r.form.pure == ZetaWord{{1, 1}});
  CHECK(r.form.coxeter.is_identity());

  r = rewrite(word(g, "S:s"), a2.roots);
  CHECK(r.form.pure == ZetaWord{{-1, 1}});
  CHECK(r.form.coxeter == simple_reflection(g, 0));

  r = rewrite({}, a2.roots);
  CHECK(r.form.pure.empty());
  CHECK(r.form.coxeter.is_identity());

  r = rewrite(word(g, "S:s^-1"), a2.roots);
  CHECK(r.form.pure == ZetaWord{{1, -1}});

  r = rewrite(word(g, "S:s S:s^-1"), a2.roots);
  CHECK(r.form.pure == ZetaWord{{-1, 1}, {-1, -1}});
  CHECK(abelianize(r.form.pure).is_zero());
  CHECK(r.form.coxeter.is_identity());
  CHECK(format_zeta_word(r.form.pure) == "z:-1^1 z:-1^-1");
}

TEST_CASE("expand_zeta") {
  const fixture::Finite a1("A1");
  CHECK(expand_zeta(a1.roots, 1) == word(a1.graph, "T:s S:s"));
  CHECK(expand_zeta(a1.roots, -1) == word(a1.graph, "T:s T:s S:s T:s"));
  CHECK(expand_zeta(a1.roots, 1, -1) == word(a1.graph, "S:s^-1 T:s"));
  for (const char* name : fixture::kSpherical) {
    const std::string label = name;
    CAPTURE(label);
    const fixture::Finite f(name);
    for (RootIndex b : f.roots.all_indices())
      for (int e : {1, -1}) {
        const auto r = rewrite(expand_zeta(f.roots, b, e), f.roots);
        CHECK(r.form.pure == ZetaWord{{b, e}});
        CHECK(r.form.coxeter.is_identity());
      }
  }
}

TEST_CASE("pushing zeta through the Coxeter section") {
  Rng rng(13);
  for (const char* name : {"A2", "B2", "A3"}) {
    const fixture::Finite f(name);
    for (int i = 0; i < 100; ++i) {
      const VertexWord w = random_vertex_word(rng, f.graph, 6);
      const auto all = f.roots.all_indices();
      const RootIndex b = all[uniform(rng, 0, static_cast<int>(all.size()) - 1)];
      const auto r = rewrite(
          concat({tau_word(w), expand_zeta(f.roots, b), tau_word(VertexWord(w.rbegin(), w.rend()))}),
          f.roots);
      const auto img = f.roots.find(apply_word(f.graph, w, f.roots.vector(b)));
      REQUIRE(img.has_value());
      CHECK(r.form.pure == ZetaWord{{*img, 1}});
      CHECK(r.form.coxeter.is_identity());
    }
  }
}

TEST_CASE("rewriting keeps the Coxeter projection and detects pure words") {
  Rng rng(14);
  for (const char* name : fixture::kSpherical) {
    const fixture::Finite f(name);
    for (int i = 0; i < 200; ++i) {
      const VAWord w = random_va_word(rng, f.graph, 12);
      const auto r = rewrite(w, f.roots);
      CHECK(r.form.coxeter == word_element(f.graph, coxeter_projection(w)));
      CHECK(word_element(f.graph, coxeter_projection(expand_normal_form(f.roots, r.form))) ==
            r.form.coxeter);
      // w w^-1 is pure.
      const auto p = rewrite(concat({w, inverse_word(w)}), f.roots);
      CHECK(p.form.coxeter.is_identity());
      CHECK(abelianize(p.form.pure).is_zero());
    }
  }
}

TEST_CASE("normal forms agree under Psi on right-angled graphs") {
  Rng rng(15);
  for (const char* name : {"A1", "A1xA1"}) {
    const fixture::Finite f(name);
    const auto basis = full_basis(f.roots);
    for (int i = 0; i < 200; ++i) {
      const VAWord w = random_va_word(rng, f.graph, 12);
      const auto r = rewrite(w, f.roots);
      CHECK(psi_word(f.roots, basis, w) ==
            psi_word(f.roots, basis, expand_normal_form(f.roots, r.form)));
    }
  }
}

TEST_CASE("rewriting grows a truncated root system when needed") {
  const auto g = corpus_graph("affine-A2");
  const auto rs = enumerate_roots(g, 0);
  const auto w = parse_va_word(g, "T:s T:t T:u T:s S:t");
  const auto r = rewrite(w, rs);
  CHECK(r.roots.positive_count() > rs.positive_count());
  REQUIRE(r.form.pure.size() == 1);
  const auto [pw, base] = r.roots.discovery(r.form.pure[0].root);
  CHECK(apply_word(g, pw, unit_vector(g, base)) == r.roots.vector(r.form.pure[0].root));
}

TEST_CASE("pva relations") {
  const fixture::Finite a2("A2");
  const MhatTable mh(a2.roots, a2.table);
  const auto [lhs, rhs] = pva_relation(a2.roots, mh, 1, 2);
  // beta_1 = alpha_s, beta_2 = r_{alpha_s}(alpha_t), beta_3 = r_{alpha_s} r_{alpha_t}(alpha_s).
  CHECK(lhs == ZetaWord{{2, 1}, {3, 1}, {1, 1}});
  ZetaWord rev(lhs.rbegin(), lhs.rend());
  CHECK(rhs == rev);
  CHECK(abelianize(lhs) == abelianize(rhs));
  CHECK_THROWS_AS(pva_relation(a2.roots, mh, 1, 1), NoRelation);
  CHECK_THROWS_AS(pva_relation(a2.roots, mh, 1, -1), NoRelation);

  const fixture::Finite a1a1("A1xA1");
  const MhatTable m2(a1a1.roots, a1a1.table);
  const auto [l2, r2] = pva_relation(a1a1.roots, m2, 1, 2);
  CHECK(l2 == ZetaWord{{2, 1}, {1, 1}});
  CHECK(r2 == ZetaWord{{1, 1}, {2, 1}});

  for (const char* name : fixture::kSpherical) {
    const fixture::Finite f(name);
    const MhatTable t(f.roots, f.table);
    for (RootIndex b : f.roots.all_indices())
      for (RootIndex c : f.roots.all_indices()) {
        if (b == c || t.at(b, c).is_infinite()) continue;
        const auto [l, r] = pva_relation(f.roots, t, b, c);
        CHECK(static_cast<int>(l.size()) == t.at(b, c).value());
        CHECK(ZetaWord(l.rbegin(), l.rend()) == r);
        CHECK(l.back().root == b);
      }
  }
}

TEST_CASE("pva presentations") {
  const fixture::Finite a1("A1");
  const auto p1 = pva_presentation(a1.roots, a1.table);
  CHECK(p1.generators.size() == 2);
  CHECK(p1.relations.empty());

  const std::map<std::string, std::size_t> counts{{"A2", 6},    {"B2", 8},    {"I2(5)", 10},
                                                  {"I2(6)", 12}, {"A1xA1", 4}, {"A3", 36}};
  for (const auto& [name, n] : counts) {
    const std::string label = name;
    CAPTURE(label);
    const fixture::Finite f(name);
    const auto p = pva_presentation(f.roots, f.table);
    CHECK(p.generators.size() == static_cast<std::size_t>(f.roots.total_count()));
    CHECK(p.relations.size() == n);
    for (const auto& [l, r] : p.relations) {
      auto a = l, b = r;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
  const fixture::Finite a2("A2");
  const auto text = pva_presentation(a2.roots, a2.table).str();
  CHECK(text.find("generators (6)") != std::string::npos);
  CHECK(text.find("relations (6)") != std::string::npos);
  CHECK_THROWS_AS(pva_presentation(enumerate_roots(corpus_graph("affine-A2"), 3), a2.table),
                  Unsupported);
}

TEST_CASE("abelianization") {
  CHECK(abelianize({{1, 1}, {1, -1}}).is_zero());
  CHECK(abelianize({{1, 1}, {1, 1}}) == PureVector(std::map<RootIndex, Coeff>{{1, 2}}));
  PureVector v;
  v.add(3, 2);
  v.add(-1, 1);
  v.add(3, -2);
  CHECK(v.support() == std::vector<RootIndex>{-1});
  CHECK(v[3] == 0);
  CHECK((v - v).is_zero());
  CHECK((-v)[-1] == -1);
  CHECK(v.str() == "{-1: 1}");
  CHECK_THROWS_AS(v.add(0, 1), InvalidInput);
  PureVector big;
  big.add(1, std::numeric_limits<Coeff>::max());
  CHECK_THROWS_AS(big.add(1, 1), ArithmeticOverflow);
}
