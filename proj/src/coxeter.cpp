#include "vartin/coxeter.hpp"

#include <algorithm>

#include <boost/container_hash/hash.hpp>

#include "vartin/error.hpp"

namespace vartin {

CoxeterGraph::CoxeterGraph(std::vector<std::string> vertices,
                           const std::vector<Edge>& edges,
                           std::optional<bool> spherical_hint)
    : names_(std::move(vertices)), spherical_hint_(spherical_hint) {
  const int n = size();
  for (Vertex i = 0; i < n; ++i) {
    if (names_[i].empty()) throw ParseError("vertex name must be non-empty");
    if (!index_.emplace(names_[i], i).second)
      throw ParseError("duplicate vertex '" + names_[i] + "'");
  }
  m_.assign(static_cast<std::size_t>(n) * n, Label(2));
  std::vector<bool> seen(m_.size(), false);
  for (Vertex i = 0; i < n; ++i) m_[i * n + i] = Label(1);
  for (const auto& e : edges) {
    const Vertex s = vertex(e.u), t = vertex(e.v);
    if (s == t) throw ParseError("self-loop on vertex '" + e.u + "'");
    if (!e.m.is_infinite() && e.m.value() < 2)
      throw InvalidLabel("label " + e.m.str() + " on edge " + e.u + "-" + e.v +
                         " is below 2");
    const std::size_t st = s * n + t, ts = t * n + s;
    if (seen[st] && !(m_[st] == e.m))
      throw ParseError("asymmetric or conflicting labels for edge " + e.u +
                       "-" + e.v);
    m_[st] = m_[ts] = e.m;
    seen[st] = seen[ts] = true;
  }
  std::vector<Label> off_diagonal;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) off_diagonal.push_back(m_[i * n + j]);
  ring_ = &make_ring(off_diagonal);
  form_ = std::make_shared<const BilinearForm>(*this);
}

Vertex CoxeterGraph::vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    throw UnknownVertex("unknown vertex '" + std::string(name) + "'");
  return it->second;
}

Label CoxeterGraph::label(Vertex s, Vertex t) const {
  return m_.at(static_cast<std::size_t>(s) * size() + t);
}

std::vector<Label> CoxeterGraph::labels() const {
  std::vector<Label> out;
  for (auto [s, t] : edges()) out.push_back(label(s, t));
  return out;
}

std::vector<std::pair<Vertex, Vertex>> CoxeterGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex s = 0; s < size(); ++s)
    for (Vertex t = s + 1; t < size(); ++t)
      if (!(label(s, t) == Label(2))) out.emplace_back(s, t);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> CoxeterGraph::finite_pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex s = 0; s < size(); ++s)
    for (Vertex t = s + 1; t < size(); ++t)
      if (!label(s, t).is_infinite()) out.emplace_back(s, t);
  return out;
}

ScalarVector unit_vector(const CoxeterGraph& g, Vertex s) {
  ScalarVector v(g.size(), g.ring().zero());
  v.at(s) = g.ring().one();
  return v;
}

// ---------------------------------------------------------------------------

BilinearForm::BilinearForm(const CoxeterGraph& g) : n_(g.size()) {
  const ScalarRing& R = g.ring();
  b_.reserve(static_cast<std::size_t>(n_) * n_);
  for (Vertex s = 0; s < n_; ++s) {
    for (Vertex t = 0; t < n_; ++t) {
      const Label m = g.label(s, t);
      if (s == t) b_.push_back(R.from_int(2));
      else if (m.is_infinite()) b_.push_back(R.from_int(-2));
      else b_.push_back(-R.two_cos_pi_over(m.value()));
    }
  }
}

Scalar BilinearForm::operator()(const ScalarVector& u,
                                const ScalarVector& v) const {
  Scalar acc = b_[0].ring().zero();
  for (int i = 0; i < n_; ++i) {
    if (u[i].is_zero()) continue;
    Scalar row = b_[0].ring().zero();
    for (int j = 0; j < n_; ++j)
      if (!v[j].is_zero()) row += at(i, j) * v[j];
    acc += u[i] * row;
  }
  return acc;
}

Scalar BilinearForm::with_simple(const ScalarVector& v, Vertex s) const {
  Scalar acc = b_[0].ring().zero();
  for (int i = 0; i < n_; ++i)
    if (!v[i].is_zero()) acc += v[i] * at(i, s);
  return acc;
}

// ---------------------------------------------------------------------------

std::size_t CoeffKeyHash::operator()(const std::vector<Coeff>& k) const noexcept {
  return boost::hash_range(k.begin(), k.end());
}

WElement WElement::identity(const CoxeterGraph& g) {
  return identity(g.form_ptr());
}

WElement WElement::identity(std::shared_ptr<const BilinearForm> form) {
  WElement w;
  w.n_ = form->size();
  const ScalarRing& R = form->ring();
  w.form_ = std::move(form);
  w.m_.assign(static_cast<std::size_t>(w.n_) * w.n_, R.zero());
  for (int i = 0; i < w.n_; ++i) w.m_[i * w.n_ + i] = R.one();
  return w;
}

WElement WElement::times_reflection(Vertex s) const {
  // (M rho(s))[i][t] = M[i][t] - M[i][s] B[s][t]
  WElement r = *this;
  const BilinearForm& B = *form_;
  for (int i = 0; i < n_; ++i) {
    const Scalar mis = at(i, s);
    if (mis.is_zero()) continue;
    for (int t = 0; t < n_; ++t)
      if (!B.at(s, t).is_zero()) r.m_[i * n_ + t] -= mis * B.at(s, t);
  }
  r.word_.push_back(s);
  return r;
}

WElement WElement::reflection_times(Vertex s) const {
  // (rho(s) M)[s][j] = M[s][j] - sum_k B[s][k] M[k][j]; other rows unchanged
  WElement r = *this;
  const BilinearForm& B = *form_;
  for (int j = 0; j < n_; ++j) {
    Scalar acc = B.ring().zero();
    for (int k = 0; k < n_; ++k)
      if (!B.at(s, k).is_zero() && !at(k, j).is_zero()) acc += B.at(s, k) * at(k, j);
    r.m_[s * n_ + j] -= acc;
  }
  r.word_.insert(r.word_.begin(), s);
  return r;
}

ScalarVector WElement::apply(const ScalarVector& v) const {
  ScalarVector out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) {
    Scalar acc = m_[i * n_].ring().zero();
    for (int j = 0; j < n_; ++j)
      if (!v[j].is_zero() && !at(i, j).is_zero()) acc += at(i, j) * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

ScalarVector WElement::column(Vertex s) const {
  ScalarVector out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) out.push_back(at(i, s));
  return out;
}

bool WElement::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
  return true;
}

WElement operator*(const WElement& a, const WElement& b) {
  if (a.n_ != b.n_) throw InvalidInput("WElement rank mismatch");
  WElement r;
  r.form_ = a.form_;
  r.n_ = a.n_;
  const int n = a.n_;
  r.m_.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Scalar acc = a.m_[0].ring().zero();
      for (int k = 0; k < n; ++k) {
        const Scalar& x = a.at(i, k);
        const Scalar& y = b.at(k, j);
        if (!x.is_zero() && !y.is_zero()) acc += x * y;
      }
      r.m_.push_back(std::move(acc));
    }
  }
  r.word_ = a.word_;
  r.word_.insert(r.word_.end(), b.word_.begin(), b.word_.end());
  return r;
}

bool operator==(const WElement& a, const WElement& b) {
  return a.n_ == b.n_ && a.m_ == b.m_;
}

std::vector<Coeff> WElement::key() const {
  std::vector<Coeff> k;
  if (m_.empty()) return k;
  k.reserve(m_.size() * m_[0].coeffs().size());
  for (const auto& x : m_) k.insert(k.end(), x.coeffs().begin(), x.coeffs().end());
  return k;
}

WElement simple_reflection(const CoxeterGraph& g, Vertex s) {
  if (s < 0 || s >= g.size()) throw UnknownVertex("vertex index out of range");
  return WElement::identity(g).times_reflection(s);
}

WElement simple_reflection(const CoxeterGraph& g, std::string_view s) {
  return simple_reflection(g, g.vertex(s));
}

WElement word_element(const CoxeterGraph& g, const VertexWord& w) {
  WElement r = WElement::identity(g);
  for (Vertex s : w) {
    if (s < 0 || s >= g.size()) throw UnknownVertex("vertex index out of range");
    r = r.times_reflection(s);
  }
  return r;
}

WElement w_multiply(const WElement& a, const WElement& b) { return a * b; }

VertexWord reduced_word(const WElement& a) {
  // s is a right descent of w iff rho(w)(alpha_s) is a negative root.
  auto is_descent = [](const WElement& w, Vertex s) {
    for (const Scalar& x : w.column(s)) {
      const Sign sign = scalar_sign(x);
      if (sign != Sign::Zero) return sign == Sign::Negative;
    }
    throw InternalError("zero column in a Tits matrix");
  };
  VertexWord out;
  WElement w = a;
  while (!w.is_identity()) {
    Vertex s = 0;
    while (s < w.rank() && !is_descent(w, s)) ++s;
    if (s == w.rank()) throw InternalError("non-identity element without a descent");
    out.push_back(s);
    w = w.times_reflection(s);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

WElement w_inverse(const WElement& a) {
  WElement r = WElement::identity(a.form_);
  for (auto it = a.word_.rbegin(); it != a.word_.rend(); ++it)
    r = r.times_reflection(*it);
  return r;
}

MaybeOrder w_order(const WElement& a, std::int64_t cap) {
  if (a.is_identity()) return 1;
  WElement p = a;
  for (std::int64_t t = 2; t <= cap; ++t) {
    p = p * a;
    if (p.is_identity()) return t;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> WGroupTable::index_of(const WElement& w) const {
  auto it = index_.find(w.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WGroupTable::multiply(std::size_t i, std::size_t j) const {
  std::size_t r = i;
  for (Vertex s : elements_[j].word()) r = right_multiply(r, s);
  return r;
}

std::size_t WGroupTable::inverse(std::size_t i) const {
  std::size_t r = 0;
  const auto& w = elements_[i].word();
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = right_multiply(r, *it);
  return r;
}

WGroupTable enumerate_w(const CoxeterGraph& g, std::int64_t cap) {
  if (cap < 1) throw InvalidInput("enumerate_w: cap must be >= 1");
  WGroupTable t;
  t.rank_ = g.size();
  WElement id = WElement::identity(g);
  t.index_.emplace(id.key(), 0);
  t.elements_.push_back(std::move(id));
  // BFS in discovery order; right multiplication by generators in vertex
  // order discovers each element first through its shortlex-least word.
  for (std::size_t head = 0; head < t.elements_.size(); ++head) {
    for (Vertex s = 0; s < g.size(); ++s) {
      WElement next = t.elements_[head].times_reflection(s);
      auto key = next.key();
      auto it = t.index_.find(key);
      std::size_t idx;
      if (it == t.index_.end()) {
        if (static_cast<std::int64_t>(t.elements_.size()) >= cap)
          throw CapExceeded("Coxeter group has more than " +
                            std::to_string(cap) + " elements");
        idx = t.elements_.size();
        t.index_.emplace(std::move(key), idx);
        t.elements_.push_back(std::move(next));
      } else {
        idx = it->second;
      }
      if (t.right_.size() < (head + 1) * t.rank_)
        t.right_.resize((head + 1) * t.rank_);
      t.right_[head * t.rank_ + s] = idx;
    }
  }
  return t;
}

std::vector<std::size_t> centralizer(const WGroupTable& table,
                                     const WElement& theta) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.order(); ++i) {
    const WElement& u = table[i];
    if (u * theta == theta * u) out.push_back(i);
  }
  return out;
}

}  // namespace vartin
