#include "vartin/crystal.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vartin/error.hpp"
#include "vartin/kernels.hpp"

namespace vartin {

bool operator==(const CrystalElement& a, const CrystalElement& b) {
  return a.pure == b.pure && a.theta == b.theta;
}

CrystalElement crystal_identity(const RootSystem& rs) {
  return {PureVector{}, WElement::identity(rs.graph())};
}

CrystalElement coxeter_element(const RootSystem& rs, const VertexWord& w) {
  return {PureVector{}, word_element(rs.graph(), w)};
}

RootIndex act_on_root(const RootSystem& rs, const WElement& theta, RootIndex beta) {
  const auto img = rs.find(theta.apply(rs.vector(beta)));
  if (!img) throw TruncationError("image of root " + std::to_string(beta) + " not materialized");
  return *img;
}

PureVector act(const RootSystem& rs, const WElement& theta, const PureVector& b) {
  if (theta.is_identity()) return b;
  PureVector r;
  for (auto [k, v] : b.entries()) r.add(act_on_root(rs, theta, k), v);
  return r;
}

CrystalElement multiply(const RootSystem& rs, const CrystalElement& a,
                        const CrystalElement& b) {
  return {a.pure + act(rs, a.theta, b.pure), a.theta * b.theta};
}

CrystalElement inverse(const RootSystem& rs, const CrystalElement& e) {
  WElement ti = w_inverse(e.theta);
  PureVector p = -act(rs, ti, e.pure);
  return {std::move(p), std::move(ti)};
}

CrystalElement from_word(const RootSystem& rs, const VAWord& w) {
  auto r = rewrite(w, rs);
  if (r.roots.positive_count() != rs.positive_count())
    throw TruncationError("word reaches roots outside the given root system");
  return {abelianize(r.form.pure), std::move(r.form.coxeter)};
}

std::vector<Orbit> orbit_decomposition(const RootSystem& rs, const WElement& theta,
                                       const std::vector<RootIndex>& through,
                                       const PureVector& a) {
  std::vector<Orbit> out;
  std::set<RootIndex> done;
  for (RootIndex start : through) {
    if (done.count(start)) continue;
    Orbit o;
    RootIndex cur = start;
    do {
      o.members.push_back(cur);
      done.insert(cur);
      o.sum = checked_add(o.sum, a[cur]);
      cur = act_on_root(rs, theta, cur);
    } while (cur != start);
    out.push_back(std::move(o));
  }
  return out;
}

namespace {

// rho(theta)(beta), adding the image to `rs` when it is new.
RootIndex image_materialize(RootSystem& rs, const WElement& theta, RootIndex beta) {
  const ScalarVector v = theta.apply(rs.vector(beta));
  if (auto k = rs.find(v)) return *k;
  auto [w, b] = rs.discovery(beta);
  VertexWord tw = theta.word();
  tw.insert(tw.end(), w.begin(), w.end());
  return materialize(rs, v, tw, b);
}

}  // namespace

MaybeOrder order(const RootSystem& rs, const CrystalElement& e, std::int64_t cap) {
  const MaybeOrder t = w_order(e.theta, cap);
  if (!t) throw CapExceeded("Coxeter part has no order within " + std::to_string(cap));
  RootSystem local = rs;
  for (RootIndex k : e.pure.support()) {
    RootIndex cur = k;
    for (std::int64_t i = 0; i < *t; ++i) cur = image_materialize(local, e.theta, cur);
    if (cur != k) throw InternalError("orbit does not close after the order of theta");
  }
  for (const auto& o : orbit_decomposition(local, e.theta, e.pure.support(), e.pure))
    if (o.sum != 0) return std::nullopt;
  return t;
}

ConjugacyResult is_conjugate(const RootSystem& rs, const WGroupTable& table,
                             const CrystalElement& e1, const CrystalElement& e2) {
  if (!rs.complete()) throw Unsupported("conjugacy needs a spherical graph");
  const WElement& theta = e1.theta;
  std::optional<std::size_t> vi;
  for (std::size_t i = 0; i < table.order() && !vi; ++i)
    if (table[i] * e2.theta == theta * table[i]) vi = i;
  if (!vi) return {};
  const CrystalElement v{PureVector{}, table[*vi]};
  const CrystalElement e2c = multiply(rs, multiply(rs, v, e2), inverse(rs, v));

  for (std::size_t ui : centralizer(table, theta)) {
    const WElement& u = table[ui];
    const PureVector r = e1.pure - act(rs, u, e2c.pure);
    const auto orbits = orbit_decomposition(rs, theta, r.support(), r);
    if (std::any_of(orbits.begin(), orbits.end(), [](const Orbit& o) { return o.sum != 0; }))
      continue;
    // p - theta.p = r, solved along each orbit with p at the first member 0.
    PureVector p;
    for (const auto& o : orbits) {
      Coeff acc = 0;
      for (std::size_t j = 1; j < o.members.size(); ++j) {
        acc = checked_add(acc, r[o.members[j]]);
        p.add(o.members[j], acc);
      }
    }
    CrystalElement g{std::move(p), u * table[*vi]};
    const CrystalElement check = multiply(rs, multiply(rs, g, e2), inverse(rs, g));
    if (!(check == e1)) throw InternalError("conjugacy witness failed verification");
    return {true, std::move(g)};
  }
  return {};
}

// ---------------------------------------------------------------------------

bool HolonomyMatrix::is_identity() const {
  for (std::size_t k = 0; k < image.size(); ++k)
    if (image[k] != static_cast<RootIndex>(k + 1)) return false;
  return true;
}

RootIndex HolonomyMatrix::operator()(RootIndex i) const {
  const RootIndex img = image.at(std::abs(i) - 1);
  return i > 0 ? img : -img;
}

HolonomyMatrix holonomy(const RootSystem& rs, const WElement& theta) {
  if (!rs.complete()) throw Unsupported("holonomy needs a spherical graph");
  HolonomyMatrix h;
  h.image.reserve(rs.positive_count());
  for (RootIndex k = 1; k <= rs.positive_count(); ++k)
    h.image.push_back(act_on_root(rs, theta, k));
  return h;
}

bool holonomy_faithful(const RootSystem& rs, const WGroupTable& table) {
  for (std::size_t i = 0; i < table.order(); ++i)
    if (holonomy(rs, table[i]).is_identity() && !table[i].is_identity()) return false;
  return true;
}

MaybeOrder oracle_order(const RootSystem& rs, const CrystalElement& e, std::int64_t cap) {
  CrystalElement p = e;
  for (std::int64_t t = 1; t <= cap; ++t) {
    if (p.pure.is_zero() && p.theta.is_identity()) return t;
    p = multiply(rs, p, e);
  }
  return std::nullopt;
}

bool oracle_conjugate(const RootSystem& rs, const WGroupTable& table,
                      const CrystalElement& e1, const CrystalElement& e2, int bound) {
  if (!rs.complete()) throw Unsupported("oracle needs a spherical graph");
  if (bound < 0) throw InvalidInput("bound must be non-negative");
  const int n = rs.graph().size();
  // W-closure of both supports.
  std::set<RootIndex> closure;
  std::vector<RootIndex> stack;
  for (const auto* e : {&e1, &e2})
    for (RootIndex k : e->pure.support())
      if (closure.insert(k).second) stack.push_back(k);
  while (!stack.empty()) {
    const RootIndex k = stack.back();
    stack.pop_back();
    for (Vertex s = 0; s < n; ++s) {
      const RootIndex j = *rs.simple_action(s, k);
      if (closure.insert(j).second) stack.push_back(j);
    }
  }
  const std::vector<RootIndex> X(closure.begin(), closure.end());
  const std::size_t d = X.size();
  std::map<RootIndex, std::int32_t> pos;
  for (std::size_t i = 0; i < d; ++i) pos[X[i]] = static_cast<std::int32_t>(i);

  double cells = 1;
  for (std::size_t i = 0; i < d; ++i) cells *= 2 * bound + 1;
  if (cells > 2e8) throw CapExceeded("oracle search space too large");

  // (theta.p)_{X[i]} = p_{theta^-1 X[i]}
  const WElement tinv = w_inverse(e1.theta);
  std::vector<std::int32_t> pre(d);
  for (std::size_t i = 0; i < d; ++i) pre[i] = pos.at(act_on_root(rs, tinv, X[i]));
  const auto& kern = kernels::active();

  std::vector<std::int64_t> p(d), diff(d), rhs(d);
  for (std::size_t ui = 0; ui < table.order(); ++ui) {
    const WElement& u = table[ui];
    if (!(u * e2.theta == e1.theta * u)) continue;
    // g = (p, u): g e2 = e1 g  <=>  p - theta1.p = a - u.b
    const PureVector target = e1.pure - act(rs, u, e2.pure);
    for (std::size_t i = 0; i < d; ++i) rhs[i] = target[X[i]];
    std::fill(p.begin(), p.end(), -bound);
    while (true) {
      kern.gather_sub(p.data(), p.data(), pre.data(), diff.data(), d);
      if (diff == rhs) return true;
      std::size_t i = 0;
      while (i < d && p[i] == bound) p[i++] = -bound;
      if (i == d) break;
      ++p[i];
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

using nlohmann::json;

CrystalElement parse_element(const RootSystem& rs, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed element JSON at byte ") + std::to_string(e.byte));
  }
  if (!doc.is_object()) throw ParseError("element document must be an object");
  PureVector pure;
  if (doc.contains("pure")) {
    if (!doc["pure"].is_object()) throw ParseError("\"pure\" must be an object");
    for (auto& [key, val] : doc["pure"].items()) {
      RootIndex k = 0;
      std::size_t used = 0;
      try {
        k = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || k == 0 || std::abs(k) > rs.positive_count())
        throw ParseError("pure." + key + ": not a valid signed root index");
      if (!val.is_number_integer()) throw ParseError("pure." + key + ": expected an integer");
      pure.add(k, val.get<Coeff>());
    }
  }
  VertexWord w;
  if (doc.contains("coxeter")) {
    if (!doc["coxeter"].is_array()) throw ParseError("\"coxeter\" must be an array");
    for (std::size_t i = 0; i < doc["coxeter"].size(); ++i) {
      const auto& v = doc["coxeter"][i];
      if (!v.is_string())
        throw ParseError("coxeter[" + std::to_string(i) + "] must be a vertex name");
      w.push_back(rs.graph().vertex(v.get<std::string>()));
    }
  }
  return {std::move(pure), word_element(rs.graph(), w)};
}

CrystalElement load_element(const RootSystem& rs, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open element file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_element(rs, ss.str());
}

std::string element_json(const RootSystem& rs, const CrystalElement& e,
                         const WGroupTable* table) {
  nlohmann::ordered_json doc;
  doc["pure"] = nlohmann::ordered_json::object();
  for (auto [k, v] : e.pure.entries()) doc["pure"][std::to_string(k)] = v;
  VertexWord w;
  std::optional<std::size_t> idx;
  if (table) idx = table->index_of(e.theta);
  if (idx) {
    w = (*table)[*idx].word();
  } else {
    w = reduced_word(e.theta);
  }
  doc["coxeter"] = nlohmann::ordered_json::array();
  for (Vertex s : w) doc["coxeter"].push_back(rs.graph().name(s));
  return doc.dump();
}

}  // namespace vartin
