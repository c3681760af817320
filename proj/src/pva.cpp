#include "vartin/pva.hpp"

#include <set>
#include <sstream>

#include "vartin/error.hpp"

namespace vartin {

std::vector<std::string> zeta_tokens(const ZetaWord& z) {
  std::vector<std::string> out;
  out.reserve(z.size());
  for (const auto& f : z)
    out.push_back("z:" + std::to_string(f.root) + (f.exp > 0 ? "^1" : "^-1"));
  return out;
}

std::string format_zeta_word(const ZetaWord& z) {
  std::string out;
  for (const auto& t : zeta_tokens(z)) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

RewriteResult rewrite(const VAWord& w, const RootSystem& rs) {
  RewriteResult r{{{}, WElement::identity(rs.graph())}, rs};
  WElement& u = r.form.coxeter;
  for (const auto& tok : w) {
    WElement us = u.times_reflection(tok.v);
    if (tok.gen == Gen::Sigma) {
      const RootIndex k = materialize(r.roots, us.column(tok.v), us.word(), tok.v);
      r.form.pure.push_back({k, +1});
    } else if (tok.gen == Gen::SigmaInv) {
      const RootIndex k = materialize(r.roots, u.column(tok.v), u.word(), tok.v);
      r.form.pure.push_back({k, -1});
    }
    u = std::move(us);
  }
  return r;
}

VAWord expand_zeta(const RootSystem& rs, RootIndex beta, int exp) {
  const auto [w, s] = rs.discovery(beta);
  VAWord out = tau_word(w);
  if (exp > 0) {
    out.push_back({Gen::Tau, s});
    out.push_back({Gen::Sigma, s});
  } else {
    out.push_back({Gen::SigmaInv, s});
    out.push_back({Gen::Tau, s});
  }
  const VAWord tail = tau_word(VertexWord(w.rbegin(), w.rend()));
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

VAWord expand_zeta_word(const RootSystem& rs, const ZetaWord& z) {
  VAWord out;
  for (const auto& f : z) {
    const VAWord e = expand_zeta(rs, f.root, f.exp);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

VAWord expand_normal_form(const RootSystem& rs, const NormalForm& nf) {
  VAWord out = expand_zeta_word(rs, nf.pure);
  const VAWord tail = tau_word(nf.coxeter.word());
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::pair<ZetaWord, ZetaWord> pva_relation(const RootSystem& rs, const MhatTable& mh,
                                           RootIndex beta, RootIndex gamma) {
  if (beta == gamma) throw NoRelation("no relation between a root and itself");
  const Label m = mh.at(beta, gamma);
  if (m.is_infinite())
    throw NoRelation("mhat(" + std::to_string(beta) + ", " + std::to_string(gamma) +
                     ") is infinite");
  const CoxeterGraph& g = rs.graph();
  const ScalarVector b = rs.vector(beta), c = rs.vector(gamma);
  std::vector<RootIndex> seq{beta};
  for (int k = 2; k <= m.value(); ++k) {
    // Even k: Prod_R(r_gamma, r_beta, k-1)(gamma); odd k: Prod_R(r_beta, r_gamma, k-1)(beta).
    // The rightmost reflection acts first.
    const bool even = k % 2 == 0;
    ScalarVector v = even ? c : b;
    for (int i = 0; i < k - 1; ++i) {
      const bool first_kind = (i % 2 == 0) == even;  // r_beta first when even
      v = reflect(g, first_kind ? b : c, v);
    }
    auto idx = rs.find(v);
    if (!idx) throw TruncationError("relation root " + format_vector(v) + " not materialized");
    seq.push_back(*idx);
  }
  ZetaWord forward, reversed;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) forward.push_back({*it, 1});
  for (RootIndex i : seq) reversed.push_back({i, 1});
  return {forward, reversed};
}

std::string Presentation::str() const {
  std::ostringstream out;
  out << "generators (" << generators.size() << "):";
  for (const auto& gname : generators) out << ' ' << gname;
  out << "\nrelations (" << relations.size() << "):\n";
  auto word = [](const std::vector<std::string>& w) {
    if (w.empty()) return std::string("1");
    std::string s;
    for (const auto& t : w) s += (s.empty() ? "" : " ") + t;
    return s;
  };
  for (const auto& [l, r] : relations) out << "  " << word(l) << " = " << word(r) << '\n';
  return out.str();
}

Presentation pva_presentation(const RootSystem& rs, const WGroupTable& table) {
  if (!rs.complete()) throw Unsupported("pva-presentation needs a spherical graph");
  const MhatTable mh(rs, table);
  Presentation p;
  const auto all = rs.all_indices();
  for (RootIndex i : all) p.generators.push_back("z:" + std::to_string(i));
  std::set<std::pair<ZetaWord, ZetaWord>> seen;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (mh.at(all[a], all[b]).is_infinite()) continue;
      auto [lhs, rhs] = pva_relation(rs, mh, all[a], all[b]);
      auto key = lhs < rhs ? std::pair{lhs, rhs} : std::pair{rhs, lhs};
      if (!seen.insert(key).second) continue;
      p.relations.emplace_back(zeta_tokens(lhs), zeta_tokens(rhs));
    }
  return p;
}

// ---------------------------------------------------------------------------

PureVector::PureVector(std::map<RootIndex, Coeff> entries) {
  for (auto [k, v] : entries) add(k, v);
}

Coeff PureVector::operator[](RootIndex i) const {
  auto it = e_.find(i);
  return it == e_.end() ? 0 : it->second;
}

void PureVector::add(RootIndex i, Coeff v) {
  if (i == 0) throw InvalidInput("root index 0 is not valid");
  if (v == 0) return;
  auto [it, inserted] = e_.emplace(i, v);
  if (inserted) return;
  it->second = checked_add(it->second, v);
  if (it->second == 0) e_.erase(it);
}

std::vector<RootIndex> PureVector::support() const {
  std::vector<RootIndex> out;
  for (auto [k, v] : e_) out.push_back(k);
  return out;
}

PureVector operator+(const PureVector& a, const PureVector& b) {
  PureVector r = a;
  for (auto [k, v] : b.e_) r.add(k, v);
  return r;
}

PureVector operator-(const PureVector& a, const PureVector& b) { return a + (-b); }

PureVector PureVector::operator-() const {
  PureVector r;
  for (auto [k, v] : e_) r.e_.emplace(k, checked_sub(0, v));
  return r;
}

std::string PureVector::str() const {
  std::string out = "{";
  for (auto [k, v] : e_) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(k) + ": " + std::to_string(v);
  }
  return out + "}";
}

PureVector abelianize(const ZetaWord& z) {
  PureVector v;
  for (const auto& f : z) v.add(f.root, f.exp);
  return v;
}

}  // namespace vartin
