#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vartin/pva.hpp"

namespace vartin {

/// Element (a, theta) of Z^Phi x| W. Multiplication:
/// (a, theta)(b, theta') = (a + theta.b, theta theta'), (theta.b)_{rho(theta) beta} = b_beta.
struct CrystalElement {
  PureVector pure;
  WElement theta;
};

bool operator==(const CrystalElement& a, const CrystalElement& b);

CrystalElement crystal_identity(const RootSystem& rs);
/// (0, w) for the Coxeter element of a word.
CrystalElement coxeter_element(const RootSystem& rs, const VertexWord& w);

/// Signed index of rho(theta)(beta); throws TruncationError when the image
/// is not materialized.
RootIndex act_on_root(const RootSystem& rs, const WElement& theta, RootIndex beta);
PureVector act(const RootSystem& rs, const WElement& theta, const PureVector& b);

CrystalElement multiply(const RootSystem& rs, const CrystalElement& a,
                        const CrystalElement& b);
CrystalElement inverse(const RootSystem& rs, const CrystalElement& e);

/// Abelianized pure part and Coxeter part of the rewritten word.
CrystalElement from_word(const RootSystem& rs, const VAWord& w);

struct Orbit {
  std::vector<RootIndex> members;  // members[j] = rho(theta)^j (members[0])
  Coeff sum = 0;
};

/// rho(theta)-orbits through the given indices, each listed once, with the
/// sums of `a` over them.
std::vector<Orbit> orbit_decomposition(const RootSystem& rs, const WElement& theta,
                                       const std::vector<RootIndex>& through,
                                       const PureVector& a);

inline constexpr std::int64_t kDefaultThetaCap = 10000;

/// Order via the orbit-sum criterion; nullopt is infinite order. Non-spherical
/// systems are extended locally to hold the needed orbits. Throws CapExceeded
/// when theta has no order within `cap`.
MaybeOrder order(const RootSystem& rs, const CrystalElement& e,
                 std::int64_t cap = kDefaultThetaCap);

struct ConjugacyResult {
  bool conjugate = false;
  /// g with g e2 g^-1 = e1.
  std::optional<CrystalElement> witness;
};

/// Decides conjugacy by matching orbit sums up to the centralizer of theta.
/// Throws Unsupported on truncated systems.
ConjugacyResult is_conjugate(const RootSystem& rs, const WGroupTable& table,
                             const CrystalElement& e1, const CrystalElement& e2);

/// Signed permutation of the roots induced by rho(theta):
/// image[k-1] = index of rho(theta)(alpha_k-th positive root).
struct HolonomyMatrix {
  std::vector<RootIndex> image;
  bool is_identity() const;
  RootIndex operator()(RootIndex i) const;
};

HolonomyMatrix holonomy(const RootSystem& rs, const WElement& theta);
bool holonomy_faithful(const RootSystem& rs, const WGroupTable& table);

/// Repeated multiplication up to cap; nullopt when the identity is not reached.
MaybeOrder oracle_order(const RootSystem& rs, const CrystalElement& e, std::int64_t cap);

/// Exhaustive search over (p, u) with p supported on the W-closure of both
/// supports with entries in [-bound, bound].
bool oracle_conjugate(const RootSystem& rs, const WGroupTable& table,
                      const CrystalElement& e1, const CrystalElement& e2, int bound);

/// Element document {"pure": {"<index>": n}, "coxeter": [vertex names]}.
CrystalElement parse_element(const RootSystem& rs, std::string_view json);
CrystalElement load_element(const RootSystem& rs, const std::string& path);
/// Canonical document; with a table the Coxeter word is the shortlex one,
/// otherwise adjacent repeated letters are cancelled.
std::string element_json(const RootSystem& rs, const CrystalElement& e,
                         const WGroupTable* table = nullptr);

}  // namespace vartin
