#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vartin/roots.hpp"
#include "vartin/varep.hpp"

namespace vartin {

struct ZetaFactor {
  RootIndex root;
  int exp;  // +1 or -1
  friend auto operator<=>(const ZetaFactor&, const ZetaFactor&) = default;
};

using ZetaWord = std::vector<ZetaFactor>;

/// Tokens z:<signed-index>^<+-1>.
std::string format_zeta_word(const ZetaWord& z);

/// Pure part followed by the Coxeter part; the Coxeter part keeps the
/// sequence of letters read, so its word is a tau-word for it.
struct NormalForm {
  ZetaWord pure;
  WElement coxeter;
};

struct RewriteResult {
  NormalForm form;
  RootSystem roots;  // input system, extended if the scan met new roots
};

/// Left-to-right scan with u the running Coxeter part:
///   tau_s      -> u <- us
///   sigma_s    -> append zeta_{rho(us) alpha_s}, u <- us
///   sigma_s^-1 -> append zeta_{rho(u) alpha_s}^-1, u <- us
/// The rules follow from sigma_s = tau_s zeta_{alpha_s} and
/// iota(u) zeta_beta = zeta_{rho(u) beta} iota(u).
RewriteResult rewrite(const VAWord& w, const RootSystem& rs);

/// iota(w) tau_s sigma_s iota(w)^-1 for the discovery pair (w, s) of beta;
/// the inverse is iota(w) sigma_s^-1 tau_s iota(w)^-1.
VAWord expand_zeta(const RootSystem& rs, RootIndex beta, int exp = 1);
VAWord expand_zeta_word(const RootSystem& rs, const ZetaWord& z);
/// Expanded pure part followed by the tau-word of the Coxeter part.
VAWord expand_normal_form(const RootSystem& rs, const NormalForm& nf);

/// (Z(gamma, beta, m), Z(beta, gamma, m)) with m = mhat(beta, gamma).
/// Throws NoRelation when mhat is infinite or beta = gamma.
std::pair<ZetaWord, ZetaWord> pva_relation(const RootSystem& rs, const MhatTable& mh,
                                           RootIndex beta, RootIndex gamma);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> relations;
  std::string str() const;
};

std::vector<std::string> zeta_tokens(const ZetaWord& z);

/// Generators zeta_beta for beta in Phi; one relation per unordered pair with
/// finite mhat, deduplicated. Throws Unsupported for truncated systems.
Presentation pva_presentation(const RootSystem& rs, const WGroupTable& table);

/// Finitely supported integer vector over signed root indices.
class PureVector {
 public:
  PureVector() = default;
  explicit PureVector(std::map<RootIndex, Coeff> entries);

  Coeff operator[](RootIndex i) const;
  void add(RootIndex i, Coeff v);
  const std::map<RootIndex, Coeff>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }
  std::vector<RootIndex> support() const;

  friend PureVector operator+(const PureVector& a, const PureVector& b);
  friend PureVector operator-(const PureVector& a, const PureVector& b);
  PureVector operator-() const;
  friend bool operator==(const PureVector&, const PureVector&) = default;

  std::string str() const;

 private:
  std::map<RootIndex, Coeff> e_;  // no zero entries
};

PureVector abelianize(const ZetaWord& z);

}  // namespace vartin
