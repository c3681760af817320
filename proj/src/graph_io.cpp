#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vartin/coxeter.hpp"
#include "vartin/error.hpp"

namespace vartin {

using nlohmann::json;

namespace {

Label parse_label(const json& m, const std::string& where) {
  if (m.is_string()) {
    const auto s = m.get<std::string>();
    if (s == "inf" || s == "infinity") return Label::infinity();
    throw ParseError(where + ": label must be an integer or \"inf\", got \"" +
                     s + "\"");
  }
  if (!m.is_number_integer())
    throw ParseError(where + ": label must be an integer or \"inf\"");
  const auto v = m.get<std::int64_t>();
  if (v < 2)
    throw InvalidLabel(where + ": label " + std::to_string(v) +
                       " violates m >= 2");
  if (v > 1'000'000) throw ParseError(where + ": label too large");
  return Label(static_cast<int>(v));
}

}  // namespace

CoxeterGraph parse_graph(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON at byte ") +
                     std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph document must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("missing array \"vertices\"");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const auto& v = doc["vertices"][i];
    if (!v.is_string())
      throw ParseError("vertices[" + std::to_string(i) + "] must be a string");
    names.push_back(v.get<std::string>());
  }
  std::vector<CoxeterGraph::Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const auto& e = doc["edges"][i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!e.is_object() || !e.contains("u") || !e.contains("v") ||
          !e["u"].is_string() || !e["v"].is_string())
        throw ParseError(where + ": expected {\"u\": name, \"v\": name, \"m\": label}");
      Label m(3);
      if (e.contains("m")) m = parse_label(e["m"], where + ".m");
      edges.push_back({e["u"].get<std::string>(), e["v"].get<std::string>(), m});
    }
  }
  std::optional<bool> hint;
  if (doc.contains("spherical")) {
    if (!doc["spherical"].is_boolean())
      throw ParseError("\"spherical\" must be a boolean");
    hint = doc["spherical"].get<bool>();
  }
  try {
    return CoxeterGraph(std::move(names), edges, hint);
  } catch (const UnknownVertex& e) {
    throw ParseError(std::string("edge refers to ") + e.what());
  }
}

CoxeterGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_graph(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const InvalidLabel& e) {
    throw InvalidLabel(path + ": " + e.what());
  }
}

std::string CoxeterGraph::to_json() const {
  json doc;
  doc["vertices"] = names_;
  doc["edges"] = json::array();
  for (auto [s, t] : edges()) {
    json e{{"u", names_[s]}, {"v", names_[t]}};
    const Label m = label(s, t);
    if (m.is_infinite()) e["m"] = "inf";
    else e["m"] = m.value();
    doc["edges"].push_back(std::move(e));
  }
  return doc.dump();
}

}  // namespace vartin
