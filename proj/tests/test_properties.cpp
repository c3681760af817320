#include <doctest.h>

#include <cstdlib>

#include "support.hpp"
#include "vartin/right_angled.hpp"

using namespace vartin;

namespace {

VAWord concat(const VAWord& a, const VAWord& b) {
  VAWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

TEST_CASE("reduced words and root counts") {
  for (const char* name : fixture::kSpherical) {
    const std::string label = name;
    CAPTURE(label);
    const fixture::Finite f(name);
    for (const auto& w : f.table.elements()) {
      const auto r = reduced_word(w);
      CHECK(word_element(f.graph, r) == w);
      CHECK(r.size() == w.word().size());
      // Inversion sets of reduced words have as many members as the length.
      CHECK(inversion_set(f.roots, r).size() == r.size());
    }
    // The longest element inverts every positive root.
    CHECK(reduced_word(f.table[f.table.longest()]).size() ==
          static_cast<std::size_t>(f.roots.positive_count()));
  }
}

TEST_CASE("roots are images of simple roots along their discovery pairs") {
  for (const char* name : fixture::kSpherical) {
    const fixture::Finite f(name);
    for (RootIndex b : f.roots.all_indices()) {
      const auto [w, base] = f.roots.discovery(b);
      const auto v = apply_word(f.graph, w, unit_vector(f.graph, base));
      CHECK(v == f.roots.vector(b));
      CHECK(f.roots.vector(-b) == negated(v));
      CHECK(root_sign(v) == (b > 0 ? Sign::Positive : Sign::Negative));
    }
  }
}

TEST_CASE("Psi is multiplicative and compatible with the Coxeter projection") {
  Rng rng(51);
  for (const char* name : fixture::kSpherical) {
    const std::string label = name;
    CAPTURE(label);
    const fixture::Finite f(name);
    const auto basis = full_basis(f.roots);
    for (int i = 0; i < 50; ++i) {
      const auto u = random_va_word(rng, f.graph, 6), v = random_va_word(rng, f.graph, 6);
      const auto pu = psi_word(f.roots, basis, u), pv = psi_word(f.roots, basis, v);
      CHECK(psi_word(f.roots, basis, concat(u, v)) == pu * pv);
      CHECK((psi_word(f.roots, basis, concat(u, inverse_word(u)))).is_identity());
      // Up to sign, the permutation part of Psi(u) is rho of the Coxeter projection.
      const auto rho = word_element(f.graph, coxeter_projection(u));
      for (RootIndex b = 1; b <= f.roots.positive_count(); ++b)
        CHECK(pu.image(b).first == std::abs(act_on_root(f.roots, rho, b)));
    }
  }
}

TEST_CASE("crystal images of rewritten words") {
  Rng rng(52);
  for (const char* name : fixture::kSpherical) {
    const fixture::Finite f(name);
    for (int i = 0; i < 100; ++i) {
      const auto w = random_va_word(rng, f.graph, 10);
      const auto nf = rewrite(w, f.roots).form;
      const auto e = from_word(f.roots, w);
      CHECK(e.pure == abelianize(nf.pure));
      CHECK(e.theta == nf.coxeter);
      // Finite order in the quotient implies the orbit sums vanish for theta.
      const auto ord = order(f.roots, e);
      if (ord) {
        CrystalElement p = crystal_identity(f.roots);
        for (std::int64_t k = 0; k < *ord; ++k) p = multiply(f.roots, p, e);
        CHECK(p == crystal_identity(f.roots));
      }
    }
  }
}

TEST_CASE("conjugacy is an equivalence on sampled classes") {
  Rng rng(53);
  const fixture::Finite f("A2");
  for (int i = 0; i < 60; ++i) {
    const auto a = random_crystal_element(rng, f.roots, f.table, 2, 3, false);
    const auto g1 = random_crystal_element(rng, f.roots, f.table, 2, 3, false);
    const auto g2 = random_crystal_element(rng, f.roots, f.table, 2, 3, false);
    const auto b = multiply(f.roots, multiply(f.roots, g1, a), inverse(f.roots, g1));
    const auto c = multiply(f.roots, multiply(f.roots, g2, b), inverse(f.roots, g2));
    CHECK(is_conjugate(f.roots, f.table, a, a).conjugate);
    CHECK(is_conjugate(f.roots, f.table, a, b).conjugate);
    CHECK(is_conjugate(f.roots, f.table, b, a).conjugate);
    CHECK(is_conjugate(f.roots, f.table, a, c).conjugate);
    CHECK(order(f.roots, a) == order(f.roots, c));
  }
}

TEST_CASE("presentation sizes") {
  for (const char* name : fixture::kSpherical) {
    const fixture::Finite f(name);
    const MhatTable t(f.roots, f.table);
    std::size_t finite_pairs = 0;
    const auto all = f.roots.all_indices();
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        finite_pairs += !t.at(all[i], all[j]).is_infinite();
    CHECK(pva_presentation(f.roots, f.table).relations.size() <= finite_pairs);
  }
  for (int n = 1; n <= 6; ++n) {
    SimpleGraph g;
    for (int i = 0; i < n; ++i) g.vertices.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    const auto d = doubled_graph(g);
    CHECK(d.edges.size() == 4 * g.edges.size());
    CHECK(same_relations(right_angled_presentation(g), graph_product_presentation(d)));
  }
}
