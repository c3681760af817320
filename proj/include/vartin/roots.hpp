#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vartin/coxeter.hpp"

namespace vartin {

/// Signed root identifier: +k is the k-th positive root (1-based), -k its
/// negative. Zero is never a valid index.
using RootIndex = int;

struct Root {
  ScalarVector coeffs;
  int depth = 0;
  /// Discovery pair: rho(word)(alpha_base) = coeffs.
  VertexWord word;
  Vertex base = 0;
};

/// Positive roots in canonical order plus an exact lookup. Values are
/// immutable; extension returns a new system.
class RootSystem {
 public:
  const CoxeterGraph& graph() const { return graph_; }
  int positive_count() const { return static_cast<int>(roots_.size()); }
  int total_count() const { return 2 * positive_count(); }
  bool complete() const { return complete_; }
  /// Depth bound used during enumeration (-1 when unbounded).
  int max_depth() const { return max_depth_; }

  /// Positive root k, 1 <= k <= positive_count().
  const Root& root(RootIndex k) const { return roots_.at(k - 1); }
  RootIndex simple(Vertex s) const { return simple_.at(s); }
  /// Coordinates of a signed index.
  ScalarVector vector(RootIndex i) const;
  /// Discovery pair for a signed index; for -beta it is (w s, s).
  std::pair<VertexWord, Vertex> discovery(RootIndex i) const;

  std::optional<RootIndex> find(const ScalarVector& v) const;
  /// Signed index of rho(s)(root i), if materialized.
  std::optional<RootIndex> simple_action(Vertex s, RootIndex i) const;
  /// All signed indices -N..-1, 1..N in ascending order.
  std::vector<RootIndex> all_indices() const;

  friend RootSystem enumerate_roots(const CoxeterGraph& g, int max_depth,
                                    std::int64_t cap);
  friend RootSystem extend_roots(const RootSystem& rs,
                                 std::span<const Root> additions);

 private:
  void index_root(RootIndex k);
  void fill_actions();

  CoxeterGraph graph_;
  std::vector<Root> roots_;
  std::vector<RootIndex> simple_;
  std::unordered_map<std::vector<Coeff>, RootIndex, CoeffKeyHash> index_;
  std::vector<RootIndex> action_;  // positive k, vertex s -> (k-1)*n + s; 0 = unknown
  bool complete_ = false;
  int max_depth_ = -1;
};

inline constexpr std::int64_t kDefaultRootCap = 50000;

/// Breadth-first closure of the simple roots under the simple reflections,
/// keeping positive roots only. Stops at `max_depth` (negative: unbounded)
/// or once `cap` positive roots are recorded; either marks the result
/// truncated.
RootSystem enumerate_roots(const CoxeterGraph& g, int max_depth = -1,
                           std::int64_t cap = kDefaultRootCap);

/// New system with the given positive roots appended (existing indices keep
/// their meaning). Duplicates are skipped.
RootSystem extend_roots(const RootSystem& rs, std::span<const Root> additions);

/// Positive or negative by coefficient signs; throws InternalError on a
/// mixed or zero vector.
Sign root_sign(const ScalarVector& v);

ScalarVector negated(const ScalarVector& v);

/// r_beta(v) = v - <v, beta> beta.
ScalarVector reflect(const CoxeterGraph& g, const ScalarVector& beta,
                     const ScalarVector& v);
/// rho(s)(v).
ScalarVector reflect_simple(const CoxeterGraph& g, Vertex s,
                            const ScalarVector& v);

/// rho(w)(v) for a word, rightmost letter first.
ScalarVector apply_word(const CoxeterGraph& g, const VertexWord& w,
                        const ScalarVector& v);

/// Signed index of v, extending `rs` when v is a root not yet materialized.
/// The discovery pair of an added root is (w, s) with rho(w)(alpha_s) = v.
RootIndex materialize(RootSystem& rs, const ScalarVector& v,
                      const VertexWord& w, Vertex s);

struct DihedralOrbit {
  RootSystem roots;              // input extended by any new members
  std::vector<RootIndex> members;  // ascending signed indices
};

/// Closure of {beta} under rho(s), rho(t); requires m_{s,t} finite.
DihedralOrbit dihedral_orbit(const RootSystem& rs, Vertex s, Vertex t,
                             RootIndex beta);

/// Ordered inversion set {beta_1, ..., beta_r} of the reduced word
/// s_1 ... s_r. Throws NonReducedWord when the word is not reduced.
std::vector<RootIndex> inversion_set(const RootSystem& rs,
                                     const VertexWord& word);

/// m-hat on signed root indices of a complete system, built from a full
/// scan of W x S x S.
class MhatTable {
 public:
  MhatTable(const RootSystem& rs, const WGroupTable& table);
  Label at(RootIndex beta, RootIndex gamma) const;
  int roots() const { return n_; }

 private:
  std::size_t slot(RootIndex i) const;
  int n_;
  std::vector<Label> m_;
};

/// Single m-hat query; builds the table on every call.
Label mhat(const RootSystem& rs, const WGroupTable& table, RootIndex beta,
           RootIndex gamma);

/// Signed index of rho(w)(alpha_s) for every element index and vertex.
std::vector<RootIndex> simple_root_images(const RootSystem& rs,
                                          const WGroupTable& table);

/// Exact string form of a vector, e.g. "[1, 1+c]".
std::string format_vector(const ScalarVector& v);

}  // namespace vartin
