#pragma once

// Exact arithmetic in Z[c], c = 2cos(pi/L).
//
// Every bilinear-form value -2cos(pi/m) with m | L is an algebraic integer in
// Z[c] and the minimal polynomial of c is monic, so reduced residues have
// integer coefficients. Coefficients are 64-bit with checked overflow.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace vartin {

using Coeff = std::int64_t;

/// A Coxeter label m_{s,t}: an integer >= 2, or infinity.
class Label {
 public:
  constexpr Label() = default;
  constexpr explicit Label(int m) : m_(m) {}
  static constexpr Label infinity() { return Label(0); }

  constexpr bool is_infinite() const { return m_ == 0; }
  constexpr int value() const { return m_; }

  friend constexpr bool operator==(Label, Label) = default;
  std::string str() const;

 private:
  int m_ = 2;  // 0 encodes infinity
};

/// Dense integer polynomial, coefficients from degree 0 upward. Trailing
/// zeros are trimmed so the zero polynomial is the empty vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Coeff> coeffs);

  static IntPoly monomial(int degree, Coeff c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Coeff>& coeffs() const { return c_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Division by a monic polynomial; returns {quotient, remainder}.
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Coeff> c_;
};

/// C_k(x) = 2 T_k(x/2): C_k(2cos t) = 2cos(k t).
IntPoly chebyshev_c(int k);

/// n-th cyclotomic polynomial.
IntPoly cyclotomic(int n);

/// Minimal polynomial of 2cos(2pi/n).
IntPoly real_cyclotomic(int n);

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign negate(Sign s) { return static_cast<Sign>(-to_int(s)); }

class Scalar;

/// The ring Z[2cos(pi/L)]. Rings are interned per level and never destroyed,
/// so Scalars can refer to them by plain pointer.
class ScalarRing {
 public:
  int level() const { return level_; }
  int degree() const { return degree_; }
  const IntPoly& minpoly() const { return minpoly_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(Coeff v) const;
  Scalar generator() const;  // c itself
  /// 2cos(pi/m) for m == 2 or m | L.
  Scalar two_cos_pi_over(int m) const;
  /// Reduce an arbitrary polynomial in c.
  Scalar from_poly(const IntPoly& p) const;

  /// Certified enclosure [lo_out, hi_out] of c using `bits` of precision,
  /// written as decimal strings (diagnostics only).
  std::pair<std::string, std::string> generator_bounds(int bits) const;

 private:
  friend const ScalarRing& make_ring(std::span<const Label> labels);
  friend const ScalarRing& ring_for_level(int level);
  friend class Scalar;
  friend Scalar operator*(const Scalar& a, const Scalar& b);

  explicit ScalarRing(int level);

  void reduce(std::vector<Coeff>& wide) const;

  int level_;
  IntPoly minpoly_;
  int degree_;
  // c^k mod minpoly for k in [degree, 2*degree - 2].
  std::vector<std::vector<Coeff>> high_powers_;
};

/// Ring for the labels of a Coxeter graph: L = lcm of finite labels >= 3.
/// Throws InvalidLabel for labels 0 or 1.
const ScalarRing& make_ring(std::span<const Label> labels);
const ScalarRing& ring_for_level(int level);

class Scalar {
 public:
  using Storage = boost::container::small_vector<Coeff, 4>;

  Scalar() = default;  // detached zero; only valid as an assignment target
  Scalar(const ScalarRing& ring, Storage coeffs);

  const ScalarRing& ring() const { return *ring_; }
  std::span<const Coeff> coeffs() const { return {c_.data(), c_.size()}; }

  bool is_zero() const;
  bool is_one() const;
  Sign sign() const;

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Lexicographic order on coefficient vectors, for canonical orderings.
  /// Not the real order.
  friend std::strong_ordering lex_compare(const Scalar& a, const Scalar& b);

  /// Human readable polynomial in c, e.g. "1+c" or "-2".
  std::string str() const;

 private:
  void check_ring(const Scalar& b) const;

  const ScalarRing* ring_ = nullptr;
  Storage c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Sign under the real embedding c -> 2cos(pi/L). Zero is decided exactly;
/// a nonzero value is separated from 0 by interval evaluation with doubling
/// precision.
Sign scalar_sign(const Scalar& a);

/// Enclosure of a real value at the given precision: true when the interval
/// is certified to exclude zero, with the sign written to `out`.
bool interval_sign(const ScalarRing& ring, std::span<const Coeff> coeffs,
                   int bits, Sign& out);

/// Checked 64-bit helpers; throw ArithmeticOverflow.
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_sub(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

}  // namespace vartin
