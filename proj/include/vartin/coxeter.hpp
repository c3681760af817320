#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vartin/scalar.hpp"

namespace vartin {

/// Index of a vertex of a Coxeter graph, in file order.
using Vertex = int;

class BilinearForm;

/// Word over the vertex set; the rightmost letter acts first on vectors.
using VertexWord = std::vector<Vertex>;

/// Order of an element, or nullopt for "infinite / beyond the cap".
using MaybeOrder = std::optional<std::int64_t>;

class CoxeterGraph {
 public:
  struct Edge {
    std::string u, v;
    Label m;
  };

  CoxeterGraph() = default;
  /// Validates names and labels; omitted pairs get m = 2.
  CoxeterGraph(std::vector<std::string> vertices, const std::vector<Edge>& edges,
               std::optional<bool> spherical_hint = std::nullopt);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Vertex s) const { return names_.at(s); }
  const std::vector<std::string>& names() const { return names_; }
  /// Throws UnknownVertex.
  Vertex vertex(std::string_view name) const;

  /// m_{s,t}; m_{s,s} = 1.
  Label label(Vertex s, Vertex t) const;
  std::vector<Label> labels() const;
  const ScalarRing& ring() const { return *ring_; }
  const BilinearForm& form() const { return *form_; }
  const std::shared_ptr<const BilinearForm>& form_ptr() const { return form_; }
  std::optional<bool> spherical_hint() const { return spherical_hint_; }

  /// Edges with m >= 3 (including infinity), s < t.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  /// All pairs s < t with finite m (m = 2 included).
  std::vector<std::pair<Vertex, Vertex>> finite_pairs() const;

  std::string to_json() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Label> m_;  // n*n, row-major
  const ScalarRing* ring_ = nullptr;
  std::shared_ptr<const BilinearForm> form_;
  std::optional<bool> spherical_hint_;
};

/// Parse the graph document {"vertices": [...], "edges": [{"u","v","m"}]}.
/// Throws ParseError with a location on malformed input.
CoxeterGraph parse_graph(std::string_view document);
CoxeterGraph load_graph(const std::string& path);

using ScalarVector = std::vector<Scalar>;

ScalarVector unit_vector(const CoxeterGraph& g, Vertex s);

class BilinearForm {
 public:
  explicit BilinearForm(const CoxeterGraph& g);

  const ScalarRing& ring() const { return b_[0].ring(); }
  int size() const { return n_; }
  const Scalar& at(Vertex s, Vertex t) const { return b_[s * n_ + t]; }
  Scalar operator()(const ScalarVector& u, const ScalarVector& v) const;
  /// <v, alpha_s>
  Scalar with_simple(const ScalarVector& v, Vertex s) const;

 private:
  int n_;
  std::vector<Scalar> b_;
};

/// Coxeter group element, stored as its exact Tits matrix in the basis of
/// simple roots. The word is provenance only and takes no part in equality.
class WElement {
 public:
  WElement() = default;
  static WElement identity(const CoxeterGraph& g);
  static WElement identity(std::shared_ptr<const BilinearForm> form);

  int rank() const { return n_; }
  const Scalar& at(int row, int col) const { return m_[row * n_ + col]; }
  const VertexWord& word() const { return word_; }
  void set_word(VertexWord w) { word_ = std::move(w); }

  /// this * rho(s) and rho(s) * this; both cost O(rank^2).
  WElement times_reflection(Vertex s) const;
  WElement reflection_times(Vertex s) const;

  ScalarVector apply(const ScalarVector& v) const;
  /// rho(w)(alpha_s)
  ScalarVector column(Vertex s) const;
  bool is_identity() const;

  friend WElement operator*(const WElement& a, const WElement& b);
  friend bool operator==(const WElement& a, const WElement& b);

  /// Flattened coefficients, usable as a hash key.
  std::vector<Coeff> key() const;

 private:
  friend WElement w_inverse(const WElement& a);

  std::shared_ptr<const BilinearForm> form_;
  int n_ = 0;
  std::vector<Scalar> m_;
  VertexWord word_;
};

struct CoeffKeyHash {
  std::size_t operator()(const std::vector<Coeff>& k) const noexcept;
};

/// rho(s)(v) = v - <v, alpha_s> alpha_s.
WElement simple_reflection(const CoxeterGraph& g, Vertex s);
WElement simple_reflection(const CoxeterGraph& g, std::string_view s);
/// Product of simple reflections, leftmost factor first in the product.
WElement word_element(const CoxeterGraph& g, const VertexWord& w);

WElement w_multiply(const WElement& a, const WElement& b);
/// Every element carries a word in the simple reflections; the inverse is
/// the reversed product.
WElement w_inverse(const WElement& a);
/// A reduced word for a, found by stripping right descents.
VertexWord reduced_word(const WElement& a);
/// Least t <= cap with a^t = 1, or nullopt.
MaybeOrder w_order(const WElement& a, std::int64_t cap);

/// Prod_R(x, y, m): the length-m alternating word ending in y.
template <typename T>
std::vector<T> prod_r(T x, T y, int m) {
  std::vector<T> w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) w[m - 1 - i] = (i % 2 == 0) ? y : x;
  return w;
}

inline constexpr std::int64_t kDefaultWCap = 20000;

/// All elements of a finite Coxeter group, in shortlex order of their words.
class WGroupTable {
 public:
  std::size_t order() const { return elements_.size(); }
  const WElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<WElement>& elements() const { return elements_; }
  std::optional<std::size_t> index_of(const WElement& w) const;
  /// Index of elements_[i] * s.
  std::size_t right_multiply(std::size_t i, Vertex s) const {
    return right_[i * rank_ + s];
  }
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;
  /// An element of maximal length.
  std::size_t longest() const { return elements_.size() - 1; }

 private:
  friend WGroupTable enumerate_w(const CoxeterGraph& g, std::int64_t cap);

  int rank_ = 0;
  std::vector<WElement> elements_;
  std::vector<std::size_t> right_;
  std::unordered_map<std::vector<Coeff>, std::size_t, CoeffKeyHash> index_;
};

/// Breadth-first closure of the simple reflections. Throws CapExceeded if the
/// group has more than `cap` elements.
WGroupTable enumerate_w(const CoxeterGraph& g, std::int64_t cap = kDefaultWCap);

/// All u with u theta = theta u, by exhaustive scan.
std::vector<std::size_t> centralizer(const WGroupTable& table,
                                     const WElement& theta);

}  // namespace vartin
