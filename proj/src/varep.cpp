#include "vartin/varep.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vartin/error.hpp"
#include "vartin/kernels.hpp"

namespace vartin {

// ---------------------------------------------------------------------------
// Words

VAWord parse_va_word(const CoxeterGraph& g, std::string_view text) {
  VAWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  int pos = 0;
  while (in >> tok) {
    const std::string where = "token " + std::to_string(pos++) + " '" + tok + "'";
    if (tok.size() < 3 || tok[1] != ':' || (tok[0] != 'S' && tok[0] != 'T'))
      throw ParseError(where + ": expected S:<vertex>, S:<vertex>^-1 or T:<vertex>");
    std::string name = tok.substr(2);
    int exp = 1;
    if (auto caret = name.find('^'); caret != std::string::npos) {
      const std::string e = name.substr(caret + 1);
      if (e == "-1") exp = -1;
      else if (e != "1") throw ParseError(where + ": exponent must be 1 or -1");
      name.resize(caret);
    }
    const Vertex v = g.vertex(name);
    if (tok[0] == 'T') w.push_back({Gen::Tau, v});
    else w.push_back({exp > 0 ? Gen::Sigma : Gen::SigmaInv, v});
  }
  return w;
}

std::string format_va_word(const CoxeterGraph& g, const VAWord& w) {
  std::string out;
  for (const auto& t : w) {
    if (!out.empty()) out += ' ';
    out += (t.gen == Gen::Tau ? "T:" : "S:") + g.name(t.v);
    if (t.gen == Gen::SigmaInv) out += "^-1";
  }
  return out;
}

VAWord inverse_word(const VAWord& w) {
  VAWord r(w.rbegin(), w.rend());
  for (auto& t : r) {
    if (t.gen == Gen::Sigma) t.gen = Gen::SigmaInv;
    else if (t.gen == Gen::SigmaInv) t.gen = Gen::Sigma;
  }
  return r;
}

VAWord tau_word(const VertexWord& w) {
  VAWord r;
  r.reserve(w.size());
  for (Vertex s : w) r.push_back({Gen::Tau, s});
  return r;
}

VertexWord coxeter_projection(const VAWord& w) {
  VertexWord r;
  r.reserve(w.size());
  for (const auto& t : w) r.push_back(t.v);
  return r;
}

std::string LaurentMonomial::str() const {
  if (xe == 0 && ye == 0) return "1";
  std::string out;
  auto part = [&](char var, std::int32_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e != 1) out += '^' + std::to_string(e);
  };
  part('x', xe);
  part('y', ye);
  return out;
}

// ---------------------------------------------------------------------------
// Monomial matrices

RootBasis::RootBasis(std::vector<RootIndex> positives) : roots_(std::move(positives)) {
  std::sort(roots_.begin(), roots_.end());
  roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
  for (int i = 0; i < size(); ++i) {
    if (roots_[i] <= 0) throw InvalidInput("basis roots must be positive indices");
    pos_.emplace(roots_[i], i);
  }
}

std::optional<int> RootBasis::position(RootIndex positive) const {
  if (auto it = pos_.find(positive); it != pos_.end()) return it->second;
  return std::nullopt;
}

BasisPtr full_basis(const RootSystem& rs) {
  if (!rs.complete()) throw TruncationError("full basis needs a complete root system");
  std::vector<RootIndex> all(rs.positive_count());
  for (int k = 0; k < rs.positive_count(); ++k) all[k] = k + 1;
  return std::make_shared<const RootBasis>(std::move(all));
}

MonomialMatrix::MonomialMatrix(BasisPtr basis, std::vector<std::int32_t> target,
                               std::vector<std::int32_t> xe,
                               std::vector<std::int32_t> ye)
    : basis_(std::move(basis)), target_(std::move(target)), xe_(std::move(xe)),
      ye_(std::move(ye)) {
  const auto n = static_cast<std::size_t>(basis_->size());
  if (target_.size() != n || xe_.size() != n || ye_.size() != n)
    throw InternalError("monomial matrix arrays do not match the basis");
  std::vector<bool> hit(n, false);
  for (auto t : target_) {
    if (t < 0 || static_cast<std::size_t>(t) >= n || hit[t])
      throw InternalError("monomial matrix target is not a permutation");
    hit[t] = true;
  }
}

MonomialMatrix MonomialMatrix::identity(BasisPtr basis) {
  const int n = basis->size();
  std::vector<std::int32_t> t(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  return MonomialMatrix(std::move(basis), std::move(t), std::vector<std::int32_t>(n),
                        std::vector<std::int32_t>(n));
}

std::pair<RootIndex, LaurentMonomial> MonomialMatrix::image(RootIndex beta) const {
  auto p = basis_->position(beta);
  if (!p) throw InvalidInput("root " + std::to_string(beta) + " is not in the basis");
  return {basis_->root(target_[*p]), monomial(*p)};
}

bool MonomialMatrix::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (target_[i] != i || xe_[i] != 0 || ye_[i] != 0) return false;
  return true;
}

bool MonomialMatrix::is_diagonal() const {
  for (int i = 0; i < size(); ++i)
    if (target_[i] != i) return false;
  return true;
}

MonomialMatrix MonomialMatrix::inverse() const {
  const int n = size();
  std::vector<std::int32_t> t(n), x(n), y(n);
  for (int i = 0; i < n; ++i) {
    t[target_[i]] = i;
    x[target_[i]] = -xe_[i];
    y[target_[i]] = -ye_[i];
  }
  return MonomialMatrix(basis_, std::move(t), std::move(x), std::move(y));
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (!(*a.basis_ == *b.basis_)) throw InvalidInput("monomial matrices on different bases");
  const auto n = static_cast<std::size_t>(a.size());
  std::vector<std::int32_t> t(n), x(n), y(n);
  kernels::active().compose_monomial(a.target_.data(), a.xe_.data(), a.ye_.data(),
                                     b.target_.data(), b.xe_.data(), b.ye_.data(),
                                     t.data(), x.data(), y.data(), n);
  return MonomialMatrix(a.basis_, std::move(t), std::move(x), std::move(y));
}

bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
  return *a.basis_ == *b.basis_ && a.target_ == b.target_ && a.xe_ == b.xe_ &&
         a.ye_ == b.ye_;
}

std::string MonomialMatrix::str(const RootSystem& rs) const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i)
    out << "e" << format_vector(rs.vector(basis_->root(i))) << " -> "
        << monomial(i).str() << " e" << format_vector(rs.vector(basis_->root(target_[i])))
        << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// psi

int epsilon(const CoxeterGraph& g, Vertex s, const ScalarVector& beta) {
  return -to_int(g.form().with_simple(beta, s).sign());
}

MonomialMatrix psi_generator(const RootSystem& rs, const BasisPtr& basis, VAToken tok) {
  const CoxeterGraph& g = rs.graph();
  const Vertex s = tok.v;
  const RootIndex simple = rs.simple(s);
  const int n = basis->size();
  std::vector<std::int32_t> t(n), x(n), y(n);
  for (int i = 0; i < n; ++i) {
    const RootIndex k = basis->root(i);
    if (k == simple) {
      t[i] = i;
      if (tok.gen == Gen::Sigma) x[i] = 1;
      else if (tok.gen == Gen::SigmaInv) x[i] = -1;
      continue;
    }
    std::optional<RootIndex> j = rs.simple_action(s, k);
    if (!j) j = rs.find(reflect_simple(g, s, rs.vector(k)));
    std::optional<int> p;
    if (j && *j > 0) p = basis->position(*j);
    if (!p)
      throw ClosureError("basis is not closed under the reflection in " + g.name(s));
    t[i] = *p;
    if (tok.gen == Gen::Tau) y[i] = epsilon(g, s, rs.vector(k));
  }
  return MonomialMatrix(basis, std::move(t), std::move(x), std::move(y));
}

MonomialMatrix psi_word(const RootSystem& rs, const BasisPtr& basis, const VAWord& w) {
  MonomialMatrix m = MonomialMatrix::identity(basis);
  for (const auto& tok : w) m = m * psi_generator(rs, basis, tok);
  return m;
}

std::int64_t kappa(const CoxeterGraph& g, const VertexWord& w, const ScalarVector& beta) {
  if (root_sign(beta) != Sign::Positive) throw InvalidInput("kappa expects a positive root");
  ScalarVector gamma = beta;
  std::int64_t total = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Vertex s = *it;
    if (gamma == unit_vector(g, s)) continue;  // tau_s fixes e_{alpha_s}
    total += epsilon(g, s, gamma);
    gamma = reflect_simple(g, s, gamma);
  }
  return total;
}

MonomialMatrix zeta_image(const RootSystem& rs, const BasisPtr& basis, RootIndex delta) {
  const CoxeterGraph& g = rs.graph();
  const auto [w, s] = rs.discovery(delta);
  const VertexWord winv(w.rbegin(), w.rend());
  const ScalarVector as = unit_vector(g, s);
  const int n = basis->size();
  std::vector<std::int32_t> t(n), x(n), y(n);
  for (int i = 0; i < n; ++i) {
    t[i] = i;
    ScalarVector gp = apply_word(g, winv, rs.vector(basis->root(i)));
    if (root_sign(gp) == Sign::Negative) gp = negated(gp);
    if (gp == as) x[i] = 1;
    else y[i] = epsilon(g, s, reflect_simple(g, s, gp));
  }
  return MonomialMatrix(basis, std::move(t), std::move(x), std::move(y));
}

// ---------------------------------------------------------------------------
// Relations

std::vector<Relation> defining_relations(const CoxeterGraph& g) {
  std::vector<Relation> out;
  auto sigma = [](Vertex v) { return VAToken{Gen::Sigma, v}; };
  auto tau = [](Vertex v) { return VAToken{Gen::Tau, v}; };
  for (auto [s, t] : g.finite_pairs()) {
    const int m = g.label(s, t).value();
    out.push_back({"sigma-braid", s, t, prod_r(sigma(t), sigma(s), m),
                   prod_r(sigma(s), sigma(t), m)});
    out.push_back({"tau-braid", s, t, prod_r(tau(t), tau(s), m), prod_r(tau(s), tau(t), m)});
  }
  for (Vertex s = 0; s < g.size(); ++s) out.push_back({"tau-involution", s, -1, {tau(s), tau(s)}, {}});
  for (Vertex s = 0; s < g.size(); ++s)
    for (Vertex t = 0; t < g.size(); ++t) {
      if (s == t || g.label(s, t).is_infinite()) continue;
      const int m = g.label(s, t).value();
      const Vertex r = m % 2 == 0 ? s : t;
      VAWord lhs = prod_r(tau(s), tau(t), m - 1);
      VAWord rhs = lhs;
      lhs.push_back(sigma(s));
      rhs.insert(rhs.begin(), sigma(r));
      out.push_back({"mixed", s, t, std::move(lhs), std::move(rhs)});
    }
  return out;
}

bool VerificationReport::passed() const { return failures() == 0; }

int VerificationReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const RelationCheck& c) { return !c.passed; }));
}

namespace {

std::string describe_difference(const RootSystem& rs, const MonomialMatrix& a,
                                const MonomialMatrix& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a.target(i) == b.target(i) && a.monomial(i) == b.monomial(i)) continue;
    const RootIndex k = a.basis().root(i);
    return "e" + format_vector(rs.vector(k)) + ": " + a.monomial(i).str() + " e" +
           format_vector(rs.vector(a.basis().root(a.target(i)))) + " vs " +
           b.monomial(i).str() + " e" + format_vector(rs.vector(b.basis().root(b.target(i))));
  }
  return {};
}

// Positive parts of the closure of beta under the given generators.
std::vector<RootIndex> orbit_roots(RootSystem& rs, const Relation& rel, RootIndex beta) {
  std::vector<RootIndex> members;
  if (rel.t >= 0) {
    auto orbit = dihedral_orbit(rs, rel.s, rel.t, beta);
    rs = std::move(orbit.roots);
    members = std::move(orbit.members);
  } else {
    auto [w, b] = rs.discovery(beta);
    w.insert(w.begin(), rel.s);
    const RootIndex j =
        materialize(rs, reflect_simple(rs.graph(), rel.s, rs.vector(beta)), w, b);
    members = {beta, j};
  }
  std::vector<RootIndex> pos;
  for (RootIndex m : members) pos.push_back(std::abs(m));
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  return pos;
}

}  // namespace

VerificationReport verify_relations(const RootSystem& rs, VerifyScope scope) {
  VerificationReport report;
  report.scope = scope;
  report.sample_roots = rs.positive_count();
  const auto relations = defining_relations(rs.graph());
  if (scope == VerifyScope::Complete) {
    const BasisPtr basis = full_basis(rs);
    for (const auto& rel : relations) {
      RelationCheck c{rel, 1, basis->size(), true, {}};
      const auto a = psi_word(rs, basis, rel.lhs), b = psi_word(rs, basis, rel.rhs);
      if (!(a == b)) {
        c.passed = false;
        c.counterexample = describe_difference(rs, a, b);
      }
      report.checks.push_back(std::move(c));
    }
    return report;
  }
  RootSystem work = rs;
  const int sample = rs.positive_count();
  for (const auto& rel : relations) {
    RelationCheck c{rel, 0, 0, true, {}};
    std::set<RootIndex> covered;
    for (RootIndex beta = 1; beta <= sample && c.passed; ++beta) {
      if (covered.count(beta)) continue;
      const auto roots = orbit_roots(work, rel, beta);
      covered.insert(roots.begin(), roots.end());
      const auto basis = std::make_shared<const RootBasis>(roots);
      const auto a = psi_word(work, basis, rel.lhs), b = psi_word(work, basis, rel.rhs);
      ++c.orbits;
      c.roots += basis->size();
      if (!(a == b)) {
        c.passed = false;
        c.counterexample = describe_difference(work, a, b);
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

std::string format_report(const CoxeterGraph& g, const VerificationReport& r) {
  std::ostringstream out;
  int roots = 0, orbits = 0;
  for (const auto& c : r.checks) {
    out << c.relation.family << ' ' << g.name(c.relation.s);
    if (c.relation.t >= 0) out << ',' << g.name(c.relation.t);
    out << "  orbits=" << c.orbits << " roots=" << c.roots << "  "
        << (c.passed ? "ok" : "MISMATCH " + c.counterexample) << '\n';
    roots += c.roots;
    orbits += c.orbits;
  }
  out << (r.passed() ? "PASS" : "FAIL") << ": " << r.checks.size() << " relations, "
      << orbits << " orbit checks, " << roots << " basis roots, " << r.failures()
      << " failures (scope "
      << (r.scope == VerifyScope::Complete ? "complete" : "dihedral-orbits") << ", "
      << r.sample_roots << " sample roots)\n";
  return out.str();
}

}  // namespace vartin
