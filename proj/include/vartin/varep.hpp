#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vartin/roots.hpp"

namespace vartin {

enum class Gen : std::uint8_t { Sigma, SigmaInv, Tau };

struct VAToken {
  Gen gen;
  Vertex v;
  friend bool operator==(const VAToken&, const VAToken&) = default;
};

/// Word in sigma_s, sigma_s^-1, tau_s. Tau is self-inverse, so tau^-1 is
/// stored as tau.
using VAWord = std::vector<VAToken>;

/// Whitespace-separated tokens: S:<v>, S:<v>^-1, T:<v> (T:<v>^-1 accepted).
VAWord parse_va_word(const CoxeterGraph& g, std::string_view text);
std::string format_va_word(const CoxeterGraph& g, const VAWord& w);
VAWord inverse_word(const VAWord& w);
/// tau_{s_1} ... tau_{s_r}.
VAWord tau_word(const VertexWord& w);
/// pi_P: sigma and tau both map to s.
VertexWord coxeter_projection(const VAWord& w);

struct LaurentMonomial {
  std::int32_t xe = 0;
  std::int32_t ye = 0;
  friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;
  friend LaurentMonomial operator*(LaurentMonomial a, LaurentMonomial b) {
    return {a.xe + b.xe, a.ye + b.ye};
  }
  std::string str() const;
};

/// Finite set of positive root indices serving as a basis of a submodule.
class RootBasis {
 public:
  explicit RootBasis(std::vector<RootIndex> positives);
  int size() const { return static_cast<int>(roots_.size()); }
  RootIndex root(int pos) const { return roots_[pos]; }
  const std::vector<RootIndex>& roots() const { return roots_; }
  std::optional<int> position(RootIndex positive) const;
  friend bool operator==(const RootBasis& a, const RootBasis& b) {
    return a.roots_ == b.roots_;
  }

 private:
  std::vector<RootIndex> roots_;
  std::unordered_map<RootIndex, int> pos_;
};

using BasisPtr = std::shared_ptr<const RootBasis>;

BasisPtr full_basis(const RootSystem& rs);

/// Generalized permutation matrix with Laurent-monomial entries:
/// e_{basis[i]} -> x^xe[i] y^ye[i] e_{basis[target[i]]}. Stored as parallel
/// int32 arrays.
class MonomialMatrix {
 public:
  static MonomialMatrix identity(BasisPtr basis);
  MonomialMatrix(BasisPtr basis, std::vector<std::int32_t> target,
                 std::vector<std::int32_t> xe, std::vector<std::int32_t> ye);

  const RootBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  int size() const { return basis_->size(); }
  int target(int i) const { return target_[i]; }
  LaurentMonomial monomial(int i) const { return {xe_[i], ye_[i]}; }

  /// Image of e_beta for a positive basis root.
  std::pair<RootIndex, LaurentMonomial> image(RootIndex beta) const;

  bool is_identity() const;
  bool is_diagonal() const;
  MonomialMatrix inverse() const;

  /// (a * b)(v) = a(b(v)).
  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b);

  std::string str(const RootSystem& rs) const;

 private:
  BasisPtr basis_;
  std::vector<std::int32_t> target_, xe_, ye_;
};

/// -sign <v, alpha_s>.
int epsilon(const CoxeterGraph& g, Vertex s, const ScalarVector& beta);

/// psi(sigma_s), psi(sigma_s)^-1 or psi(tau_s) on `basis`; throws
/// ClosureError when the basis is not closed under rho(s) up to sign.
MonomialMatrix psi_generator(const RootSystem& rs, const BasisPtr& basis,
                             VAToken g);
/// Rightmost token acts first.
MonomialMatrix psi_word(const RootSystem& rs, const BasisPtr& basis,
                        const VAWord& w);

/// y-exponent of psi(tau_{s_1} ... tau_{s_r})(e_beta), beta positive.
std::int64_t kappa(const CoxeterGraph& g, const VertexWord& w,
                   const ScalarVector& beta);

/// Closed-form diagonal image of zeta_delta from the discovery pair of delta.
MonomialMatrix zeta_image(const RootSystem& rs, const BasisPtr& basis,
                          RootIndex delta);

struct Relation {
  std::string family;  // sigma-braid, tau-braid, tau-involution, mixed
  Vertex s = 0;
  Vertex t = -1;  // -1 for tau-involution
  VAWord lhs, rhs;
};

/// Defining relations of the virtual Artin group with finite labels.
std::vector<Relation> defining_relations(const CoxeterGraph& g);

enum class VerifyScope { Complete, DihedralOrbits };

struct RelationCheck {
  Relation relation;
  int orbits = 0;
  int roots = 0;
  bool passed = true;
  std::string counterexample;
};

struct VerificationReport {
  VerifyScope scope = VerifyScope::Complete;
  std::vector<RelationCheck> checks;
  int sample_roots = 0;
  bool passed() const;
  int failures() const;
};

/// Complete: compares both sides on the full basis (needs a complete system).
/// DihedralOrbits: for each positive root of `rs` and each relation, compares
/// both sides on the orbit basis of that root under the relation's
/// generators.
VerificationReport verify_relations(const RootSystem& rs, VerifyScope scope);

std::string format_report(const CoxeterGraph& g, const VerificationReport& r);

}  // namespace vartin
