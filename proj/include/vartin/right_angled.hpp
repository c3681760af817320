#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vartin/pva.hpp"

namespace vartin {

/// Simple graph: commuting pairs of a right-angled Coxeter group.
struct SimpleGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, no repeats
};

/// {"vertices": [...], "edges": [{"u": ..., "v": ...}]}; a label field is
/// rejected since every edge means commutation.
SimpleGraph parse_simple_graph(std::string_view document);
SimpleGraph load_simple_graph(const std::string& path);
/// Edges of a right-angled Coxeter graph with label 2 are the commuting
/// pairs; infinite labels are non-edges. Throws InvalidInput otherwise.
SimpleGraph commutation_graph(const CoxeterGraph& g);

enum class VertexGroup { Z, Z2 };

struct LabeledGraph {
  std::vector<std::string> vertices;
  std::vector<VertexGroup> groups;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
};

/// Vertex (s, i) sits at index 2s + i and is named "<s>0" / "<s>1"; level 0
/// carries Z, level 1 carries Z2. An edge {s, t} produces (s0,t0), (s1,t1),
/// (s0,t1) and (t0,s1).
LabeledGraph doubled_graph(const SimpleGraph& g);

/// Generators S:<s>, T:<s>; tau_s^2 = 1 and, for each edge, the four
/// commutations tau_s tau_t, sigma_s sigma_t, tau_s sigma_t, tau_t sigma_s.
Presentation right_angled_presentation(const SimpleGraph& g);

/// Presentation of the graph product: Z vertices give S:<s> with no
/// relation, Z2 vertices give T:<s> with T:<s>^2 = 1, and every edge gives a
/// commutation of its two generators.
Presentation graph_product_presentation(const LabeledGraph& g);

/// Relation sets agree up to reordering and orientation of commutators.
bool same_relations(const Presentation& a, const Presentation& b);

}  // namespace vartin
