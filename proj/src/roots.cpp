#include "vartin/roots.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "vartin/error.hpp"

namespace vartin {

namespace {

std::vector<Coeff> vector_key(const ScalarVector& v) {
  std::vector<Coeff> k;
  for (const auto& x : v) k.insert(k.end(), x.coeffs().begin(), x.coeffs().end());
  return k;
}

// Descending lexicographic order of coefficient vectors: alpha_s before
// alpha_t when s precedes t.
bool lex_greater(const ScalarVector& a, const ScalarVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto c = lex_compare(a[i], b[i]);
    if (c != 0) return c > 0;
  }
  return false;
}

}  // namespace

Sign root_sign(const ScalarVector& v) {
  bool pos = false, neg = false;
  for (const auto& x : v) {
    switch (x.sign()) {
      case Sign::Positive: pos = true; break;
      case Sign::Negative: neg = true; break;
      case Sign::Zero: break;
    }
  }
  if (pos && neg) throw InternalError("root " + format_vector(v) + " has mixed signs");
  if (!pos && !neg) throw InternalError("zero vector is not a root");
  return pos ? Sign::Positive : Sign::Negative;
}

ScalarVector negated(const ScalarVector& v) {
  ScalarVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(-x);
  return r;
}

ScalarVector reflect(const CoxeterGraph& g, const ScalarVector& beta,
                     const ScalarVector& v) {
  const Scalar k = g.form()(v, beta);
  ScalarVector r = v;
  if (k.is_zero()) return r;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!beta[i].is_zero()) r[i] -= k * beta[i];
  return r;
}

ScalarVector reflect_simple(const CoxeterGraph& g, Vertex s,
                            const ScalarVector& v) {
  ScalarVector r = v;
  const Scalar k = g.form().with_simple(v, s);
  if (!k.is_zero()) r[s] -= k;
  return r;
}

ScalarVector apply_word(const CoxeterGraph& g, const VertexWord& w,
                        const ScalarVector& v) {
  ScalarVector r = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect_simple(g, *it, r);
  return r;
}

std::string format_vector(const ScalarVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------

ScalarVector RootSystem::vector(RootIndex i) const {
  if (i == 0 || std::abs(i) > positive_count())
    throw InvalidInput("root index " + std::to_string(i) + " out of range");
  return i > 0 ? roots_[i - 1].coeffs : negated(roots_[-i - 1].coeffs);
}

std::pair<VertexWord, Vertex> RootSystem::discovery(RootIndex i) const {
  const Root& r = root(std::abs(i));
  if (i > 0) return {r.word, r.base};
  VertexWord w = r.word;
  w.push_back(r.base);
  return {std::move(w), r.base};
}

std::optional<RootIndex> RootSystem::find(const ScalarVector& v) const {
  if (static_cast<int>(v.size()) != graph_.size()) return std::nullopt;
  if (auto it = index_.find(vector_key(v)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::optional<RootIndex> RootSystem::simple_action(Vertex s, RootIndex i) const {
  const int n = graph_.size();
  const RootIndex img = action_.at(static_cast<std::size_t>(std::abs(i) - 1) * n + s);
  if (img == 0) return std::nullopt;
  return i > 0 ? img : -img;
}

std::vector<RootIndex> RootSystem::all_indices() const {
  std::vector<RootIndex> out;
  for (int k = positive_count(); k >= 1; --k) out.push_back(-k);
  for (int k = 1; k <= positive_count(); ++k) out.push_back(k);
  return out;
}

void RootSystem::index_root(RootIndex k) {
  const ScalarVector& v = roots_[k - 1].coeffs;
  index_.emplace(vector_key(v), k);
  index_.emplace(vector_key(negated(v)), -k);
}

void RootSystem::fill_actions() {
  const int n = graph_.size();
  action_.resize(roots_.size() * n, 0);
  for (int k = 1; k <= positive_count(); ++k)
    for (Vertex s = 0; s < n; ++s) {
      RootIndex& slot = action_[static_cast<std::size_t>(k - 1) * n + s];
      if (slot == 0)
        if (auto j = find(reflect_simple(graph_, s, roots_[k - 1].coeffs))) slot = *j;
    }
}

RootSystem enumerate_roots(const CoxeterGraph& g, int max_depth, std::int64_t cap) {
  const int n = g.size();
  if (cap < n) throw InvalidInput("root cap must be at least the number of vertices");
  RootSystem rs;
  rs.graph_ = g;
  rs.max_depth_ = max_depth;
  std::unordered_map<std::vector<Coeff>, bool, CoeffKeyHash> seen;
  std::vector<Root> frontier;
  for (Vertex s = 0; s < n; ++s) {
    Root r{unit_vector(g, s), 0, {}, s};
    seen.emplace(vector_key(r.coeffs), true);
    frontier.push_back(std::move(r));
  }
  rs.complete_ = n == 0;
  int depth = 0;
  while (!frontier.empty()) {
    for (auto& r : frontier) rs.roots_.push_back(r);
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (Vertex s = 0; s < n; ++s) {
        ScalarVector v = reflect_simple(g, s, beta.coeffs);
        if (root_sign(v) == Sign::Negative) continue;  // beta = alpha_s
        auto key = vector_key(v);
        if (!seen.emplace(std::move(key), true).second) continue;
        VertexWord w{s};
        w.insert(w.end(), beta.word.begin(), beta.word.end());
        next.push_back(Root{std::move(v), depth + 1, std::move(w), beta.base});
      }
    }
    if (next.empty()) {
      rs.complete_ = true;
      break;
    }
    if (max_depth >= 0 && depth + 1 > max_depth) break;
    if (static_cast<std::int64_t>(rs.roots_.size() + next.size()) > cap) break;
    std::stable_sort(next.begin(), next.end(), [](const Root& a, const Root& b) {
      return lex_greater(a.coeffs, b.coeffs);
    });
    frontier = std::move(next);
    ++depth;
  }
  for (Vertex s = 0; s < n; ++s) rs.simple_.push_back(s + 1);
  for (int k = 1; k <= rs.positive_count(); ++k) rs.index_root(k);
  rs.fill_actions();
  return rs;
}

RootSystem extend_roots(const RootSystem& rs, std::span<const Root> additions) {
  RootSystem out = rs;
  for (const Root& r : additions) {
    if (root_sign(r.coeffs) != Sign::Positive)
      throw InternalError("extend_roots expects positive roots");
    if (out.find(r.coeffs)) continue;
    // Verify the discovery pair before accepting the root.
    if (apply_word(out.graph_, r.word, unit_vector(out.graph_, r.base)) != r.coeffs)
      throw InternalError("discovery pair does not reproduce root " +
                          format_vector(r.coeffs));
    out.roots_.push_back(r);
    out.index_root(out.positive_count());
  }
  out.fill_actions();
  return out;
}

RootIndex materialize(RootSystem& rs, const ScalarVector& v, const VertexWord& w,
                      Vertex s) {
  if (auto i = rs.find(v)) return *i;
  const int depth = static_cast<int>(w.size());
  if (root_sign(v) == Sign::Positive) {
    Root r{v, depth, w, s};
    rs = extend_roots(rs, std::span<const Root>(&r, 1));
    return rs.positive_count();
  }
  VertexWord ws = w;
  ws.push_back(s);
  Root r{negated(v), depth + 1, std::move(ws), s};
  rs = extend_roots(rs, std::span<const Root>(&r, 1));
  return -rs.positive_count();
}

DihedralOrbit dihedral_orbit(const RootSystem& rs, Vertex s, Vertex t,
                             RootIndex beta) {
  const CoxeterGraph& g = rs.graph();
  if (s == t || g.label(s, t).is_infinite())
    throw InvalidInput("dihedral orbit needs distinct s, t with finite label");
  DihedralOrbit out{rs, {}};
  std::set<RootIndex> members{beta};
  std::deque<RootIndex> queue{beta};
  while (!queue.empty()) {
    const RootIndex i = queue.front();
    queue.pop_front();
    for (Vertex x : {s, t}) {
      std::optional<RootIndex> j = out.roots.simple_action(x, i);
      if (!j) {
        auto [w, b] = out.roots.discovery(i);
        w.insert(w.begin(), x);
        j = materialize(out.roots, reflect_simple(g, x, out.roots.vector(i)), w, b);
      }
      if (members.insert(*j).second) queue.push_back(*j);
    }
  }
  out.members.assign(members.begin(), members.end());
  return out;
}

std::vector<RootIndex> inversion_set(const RootSystem& rs, const VertexWord& word) {
  const CoxeterGraph& g = rs.graph();
  const std::size_t r = word.size();
  std::vector<RootIndex> out(r);
  std::set<RootIndex> seen;
  for (std::size_t i = r; i-- > 0;) {
    // beta_{i+1} = rho(s_r ... s_{i+2})(alpha_{s_{i+1}}) in 1-based terms.
    const VertexWord prefix(word.rbegin(), word.rbegin() + (r - 1 - i));
    const ScalarVector v = apply_word(g, prefix, unit_vector(g, word[i]));
    if (root_sign(v) != Sign::Positive)
      throw NonReducedWord("word is not reduced: a negative root appears");
    auto k = rs.find(v);
    if (!k) throw TruncationError("inversion root " + format_vector(v) + " not materialized");
    if (!seen.insert(*k).second) throw NonReducedWord("word is not reduced: repeated root");
    out[i] = *k;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<RootIndex> simple_root_images(const RootSystem& rs,
                                          const WGroupTable& table) {
  if (!rs.complete()) throw TruncationError("root system is truncated");
  const int n = rs.graph().size();
  std::vector<RootIndex> img(table.order() * n);
  for (std::size_t w = 0; w < table.order(); ++w)
    for (Vertex s = 0; s < n; ++s) {
      auto k = rs.find(table[w].column(s));
      if (!k) throw InternalError("image of a simple root is not a root");
      img[w * n + s] = *k;
    }
  return img;
}

MhatTable::MhatTable(const RootSystem& rs, const WGroupTable& table)
    : n_(rs.positive_count()) {
  const CoxeterGraph& g = rs.graph();
  const int n = g.size();
  const auto img = simple_root_images(rs, table);
  m_.assign(static_cast<std::size_t>(2 * n_) * 2 * n_, Label::infinity());
  for (RootIndex i : rs.all_indices()) m_[slot(i) * 2 * n_ + slot(i)] = Label(1);
  for (std::size_t w = 0; w < table.order(); ++w)
    for (Vertex s = 0; s < n; ++s)
      for (Vertex t = 0; t < n; ++t) {
        if (s == t || g.label(s, t).is_infinite()) continue;
        const RootIndex b = img[w * n + s], c = img[w * n + t];
        m_[slot(b) * 2 * n_ + slot(c)] = g.label(s, t);
      }
}

std::size_t MhatTable::slot(RootIndex i) const {
  if (i == 0 || std::abs(i) > n_) throw InvalidInput("root index out of range");
  return static_cast<std::size_t>(i < 0 ? i + n_ : i + n_ - 1);
}

Label MhatTable::at(RootIndex beta, RootIndex gamma) const {
  return m_[slot(beta) * 2 * n_ + slot(gamma)];
}

Label mhat(const RootSystem& rs, const WGroupTable& table, RootIndex beta,
           RootIndex gamma) {
  return MhatTable(rs, table).at(beta, gamma);
}

}  // namespace vartin
