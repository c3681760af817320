#include "vartin/right_angled.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vartin/error.hpp"

namespace vartin {

using nlohmann::json;

namespace {

std::vector<std::pair<int, int>> normalized(std::vector<std::pair<int, int>> e) {
  for (auto& [u, v] : e)
    if (u > v) std::swap(u, v);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

using Word = std::vector<std::string>;

Word commutator_lhs(const std::string& a, const std::string& b) { return {a, b}; }

// Canonical key of a relation: a commutation is stored as its sorted pair.
std::pair<Word, Word> relation_key(const std::pair<Word, Word>& r) {
  const auto& [l, rr] = r;
  if (l.size() == 2 && rr.size() == 2 && l[0] == rr[1] && l[1] == rr[0]) {
    Word k = l;
    std::sort(k.begin(), k.end());
    return {k, {"<commutes>"}};
  }
  return std::min(r, std::pair{rr, l});
}

}  // namespace

SimpleGraph parse_simple_graph(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte));
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("missing array \"vertices\"");
  SimpleGraph g;
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const auto& v = doc["vertices"][i];
    if (!v.is_string()) throw ParseError("vertices[" + std::to_string(i) + "] must be a string");
    if (!index.emplace(v.get<std::string>(), static_cast<int>(i)).second)
      throw ParseError("duplicate vertex '" + v.get<std::string>() + "'");
    g.vertices.push_back(v.get<std::string>());
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const auto& e = doc["edges"][i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e["u"].is_string() ||
          !e["v"].is_string())
        throw ParseError(where + ": expected {\"u\": name, \"v\": name}");
      if (e.contains("m")) throw ParseError(where + ": simple graph edges carry no label");
      auto u = index.find(e["u"].get<std::string>());
      auto v = index.find(e["v"].get<std::string>());
      if (u == index.end() || v == index.end()) throw ParseError(where + ": unknown vertex");
      if (u->second == v->second) throw ParseError(where + ": self-loop");
      g.edges.emplace_back(u->second, v->second);
    }
  }
  g.edges = normalized(std::move(g.edges));
  return g;
}

SimpleGraph load_simple_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_simple_graph(ss.str());
}

SimpleGraph commutation_graph(const CoxeterGraph& g) {
  SimpleGraph out{g.names(), {}};
  for (Vertex s = 0; s < g.size(); ++s)
    for (Vertex t = s + 1; t < g.size(); ++t) {
      const Label m = g.label(s, t);
      if (m == Label(2)) out.edges.emplace_back(s, t);
      else if (!m.is_infinite())
        throw InvalidInput("graph is not right-angled: label " + m.str() + " on " +
                           g.name(s) + "-" + g.name(t));
    }
  return out;
}

LabeledGraph doubled_graph(const SimpleGraph& g) {
  LabeledGraph d;
  for (const auto& v : g.vertices) {
    d.vertices.push_back(v + "0");
    d.groups.push_back(VertexGroup::Z);
    d.vertices.push_back(v + "1");
    d.groups.push_back(VertexGroup::Z2);
  }
  for (auto [s, t] : g.edges) {
    d.edges.emplace_back(2 * s, 2 * t);
    d.edges.emplace_back(2 * s + 1, 2 * t + 1);
    d.edges.emplace_back(2 * s, 2 * t + 1);
    d.edges.emplace_back(2 * t, 2 * s + 1);
  }
  d.edges = normalized(std::move(d.edges));
  return d;
}

Presentation right_angled_presentation(const SimpleGraph& g) {
  Presentation p;
  for (const auto& v : g.vertices) {
    p.generators.push_back("S:" + v);
    p.generators.push_back("T:" + v);
  }
  for (const auto& v : g.vertices) p.relations.push_back({{"T:" + v, "T:" + v}, {}});
  for (auto [s, t] : g.edges) {
    const auto& a = g.vertices[s];
    const auto& b = g.vertices[t];
    for (auto [x, y] : {std::pair{"T:" + a, "T:" + b}, std::pair{"S:" + a, "S:" + b},
                        std::pair{"T:" + a, "S:" + b}, std::pair{"T:" + b, "S:" + a}})
      p.relations.push_back({commutator_lhs(x, y), commutator_lhs(y, x)});
  }
  return p;
}

Presentation graph_product_presentation(const LabeledGraph& g) {
  Presentation p;
  std::vector<std::string> gen;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    // Strip the level suffix: "<s>0" -> S:<s>, "<s>1" -> T:<s>.
    const std::string base = g.vertices[i].substr(0, g.vertices[i].size() - 1);
    gen.push_back((g.groups[i] == VertexGroup::Z ? "S:" : "T:") + base);
    p.generators.push_back(gen.back());
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (g.groups[i] == VertexGroup::Z2) p.relations.push_back({{gen[i], gen[i]}, {}});
  for (auto [u, v] : g.edges) p.relations.push_back({{gen[u], gen[v]}, {gen[v], gen[u]}});
  return p;
}

bool same_relations(const Presentation& a, const Presentation& b) {
  auto keys = [](const Presentation& p) {
    std::multiset<std::pair<Word, Word>> k;
    for (const auto& r : p.relations) k.insert(relation_key(r));
    return k;
  };
  auto ga = a.generators, gb = b.generators;
  std::sort(ga.begin(), ga.end());
  std::sort(gb.begin(), gb.end());
  return ga == gb && keys(a) == keys(b);
}

}  // namespace vartin
