#include "vartin/scalar.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include <mpfr.h>

#include "vartin/error.hpp"

namespace vartin {

std::string Label::str() const {
  return is_infinite() ? std::string("inf") : std::to_string(m_);
}

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in scalar addition");
  return r;
}

Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in scalar subtraction");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in scalar multiplication");
  return r;
}

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(int degree, Coeff c) {
  std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(a.c_[i], b.c_[j]));
  return IntPoly(std::move(r));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& d) const {
  if (d.is_zero() || d.c_.back() != 1)
    throw InternalError("divmod_monic: divisor is not monic");
  std::vector<Coeff> rem = c_;
  const int dd = d.degree();
  if (degree() < dd) return {IntPoly{}, *this};
  std::vector<Coeff> quo(rem.size() - d.c_.size() + 1, 0);
  for (int k = degree(); k >= dd; --k) {
    Coeff lead = rem[k];
    if (lead == 0) continue;
    quo[k - dd] = lead;
    for (int j = 0; j <= dd; ++j)
      rem[k - dd + j] = checked_sub(rem[k - dd + j], checked_mul(lead, d.c_[j]));
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

std::string IntPoly::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Coeff a = c_[k];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    Coeff m = a < 0 ? -a : a;
    if (k == 0 || m != 1) os << m;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

IntPoly chebyshev_c(int k) {
  IntPoly prev({2});
  if (k == 0) return prev;
  IntPoly cur({0, 1});
  const IntPoly x({0, 1});
  for (int i = 1; i < k; ++i) {
    IntPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly cyclotomic(int n) {
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lk(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly p = IntPoly::monomial(n) - IntPoly({1});
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = p.divmod_monic(cyclotomic(d));
    if (!r.is_zero()) throw InternalError("cyclotomic: inexact division");
    p = std::move(q);
  }
  std::lock_guard lk(mu);
  cache.emplace(n, p);
  return p;
}

IntPoly real_cyclotomic(int n) {
  if (n == 1) return IntPoly({-2, 1});
  if (n == 2) return IntPoly({2, 1});
  // Phi_n(z) = z^k Psi_n(z + 1/z), deg Phi_n = 2k.
  const IntPoly phi = cyclotomic(n);
  const int k = phi.degree() / 2;
  IntPoly psi({phi[k]});
  for (int j = 1; j <= k; ++j)
    psi = psi + IntPoly({phi[k + j]}) * chebyshev_c(j);
  return psi;
}

// ---------------------------------------------------------------------------
// Interval evaluation at c = 2cos(pi/L)

namespace {

class Mp {
 public:
  explicit Mp(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Mp() { mpfr_clear(v_); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// lo <= 2cos(pi/L) <= hi, for L >= 3 (so both bounds are positive).
void generator_enclosure(int level, Mp& lo, Mp& hi, mpfr_prec_t bits) {
  Mp pi_lo(bits), pi_hi(bits), t_lo(bits), t_hi(bits);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_div_si(t_lo.get(), pi_lo.get(), level, MPFR_RNDD);
  mpfr_div_si(t_hi.get(), pi_hi.get(), level, MPFR_RNDU);
  // cos is decreasing on [0, pi].
  mpfr_cos(lo.get(), t_hi.get(), MPFR_RNDD);
  mpfr_cos(hi.get(), t_lo.get(), MPFR_RNDU);
  mpfr_mul_2ui(lo.get(), lo.get(), 1, MPFR_RNDD);
  mpfr_mul_2ui(hi.get(), hi.get(), 1, MPFR_RNDU);
}

// Certified sign of sum a_i c^i, or false if the enclosure straddles 0.
bool enclosure_sign(int level, std::span<const Coeff> a, mpfr_prec_t bits,
                    Sign& out) {
  Mp lo(bits), hi(bits), plo(bits), phi(bits), slo(bits), shi(bits),
      tlo(bits), thi(bits);
  generator_enclosure(level, lo, hi, bits);
  mpfr_set_ui(plo.get(), 1, MPFR_RNDN);
  mpfr_set_ui(phi.get(), 1, MPFR_RNDN);
  mpfr_set_ui(slo.get(), 0, MPFR_RNDN);
  mpfr_set_ui(shi.get(), 0, MPFR_RNDN);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) {
      mpfr_mul(plo.get(), plo.get(), lo.get(), MPFR_RNDD);
      mpfr_mul(phi.get(), phi.get(), hi.get(), MPFR_RNDU);
    }
    const long ai = static_cast<long>(a[i]);
    if (ai == 0) continue;
    if (ai > 0) {
      mpfr_mul_si(tlo.get(), plo.get(), ai, MPFR_RNDD);
      mpfr_mul_si(thi.get(), phi.get(), ai, MPFR_RNDU);
    } else {
      mpfr_mul_si(tlo.get(), phi.get(), ai, MPFR_RNDD);
      mpfr_mul_si(thi.get(), plo.get(), ai, MPFR_RNDU);
    }
    mpfr_add(slo.get(), slo.get(), tlo.get(), MPFR_RNDD);
    mpfr_add(shi.get(), shi.get(), thi.get(), MPFR_RNDU);
  }
  if (mpfr_sgn(slo.get()) > 0) {
    out = Sign::Positive;
    return true;
  }
  if (mpfr_sgn(shi.get()) < 0) {
    out = Sign::Negative;
    return true;
  }
  return false;
}

// Whether the enclosure of p(c) contains zero at this precision.
bool enclosure_contains_zero(int level, const IntPoly& p, mpfr_prec_t bits) {
  Sign s;
  return !enclosure_sign(level, p.coeffs(), bits, s);
}

Sign certified_sign(int level, std::span<const Coeff> a) {
  for (mpfr_prec_t bits = 64;; bits *= 2) {
    Sign s;
    if (enclosure_sign(level, a, bits, s)) return s;
    if (bits > (1 << 20))
      throw InternalError("scalar_sign: precision limit reached");
  }
}

IntPoly select_minpoly(int level) {
  if (level == 1) return IntPoly({-2, 1});
  if (level == 2) return IntPoly({0, 1});
  // Every root of C_L(x) + 2 is 2cos(2 pi j / 2L) with j odd; grouping by
  // the order of the root gives the factorization into real cyclotomic
  // polynomials Psi_d with d | 2L and v2(d) = v2(2L). j and 2L - j give the
  // same root, so every factor except x + 2 appears squared.
  const int n = 2 * level;
  const int v2n = std::countr_zero(static_cast<unsigned>(n));
  const IntPoly target = chebyshev_c(level) + IntPoly({2});
  std::vector<IntPoly> factors;
  IntPoly product({1});
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || std::countr_zero(static_cast<unsigned>(d)) != v2n)
      continue;
    IntPoly f = real_cyclotomic(d);
    product = product * f;
    if (d > 2) product = product * f;
    factors.push_back(std::move(f));
  }
  if (!(product == target))
    throw InternalError("make_ring: factorization of C_L + 2 failed");
  for (mpfr_prec_t bits = 64; bits <= (1 << 16); bits *= 2) {
    const IntPoly* hit = nullptr;
    int hits = 0;
    for (const auto& f : factors) {
      if (enclosure_contains_zero(level, f, bits)) {
        hit = &f;
        ++hits;
      }
    }
    if (hits == 1) return *hit;
  }
  throw InternalError("make_ring: could not isolate the minimal polynomial");
}

}  // namespace

bool interval_sign(const ScalarRing& ring, std::span<const Coeff> coeffs,
                   int bits, Sign& out) {
  if (ring.degree() == 1) {
    Coeff v = coeffs.empty() ? 0 : coeffs[0];
    out = v > 0 ? Sign::Positive : v < 0 ? Sign::Negative : Sign::Zero;
    return v != 0;
  }
  return enclosure_sign(ring.level(), coeffs, bits, out);
}

// ---------------------------------------------------------------------------
// ScalarRing

ScalarRing::ScalarRing(int level) : level_(level) {
  minpoly_ = select_minpoly(level);
  degree_ = minpoly_.degree();
  // c^k reduced, k in [degree, 2degree-2]
  for (int k = degree_; k <= 2 * degree_ - 2; ++k) {
    auto [q, r] = IntPoly::monomial(k).divmod_monic(minpoly_);
    std::vector<Coeff> v(degree_, 0);
    for (int i = 0; i < degree_; ++i) v[i] = r[i];
    high_powers_.push_back(std::move(v));
  }
}

const ScalarRing& ring_for_level(int level) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ScalarRing>> rings;
  if (level < 1) throw InvalidLabel("ring level must be positive");
  std::lock_guard lk(mu);
  auto& slot = rings[level];
  if (!slot) slot.reset(new ScalarRing(level));
  return *slot;
}

const ScalarRing& make_ring(std::span<const Label> labels) {
  int level = 1;
  for (Label m : labels) {
    if (m.is_infinite()) continue;
    if (m.value() < 2)
      throw InvalidLabel("Coxeter label must be >= 2 or infinity, got " +
                         std::to_string(m.value()));
    if (m.value() >= 3) level = std::lcm(level, m.value());
  }
  return ring_for_level(level);
}

void ScalarRing::reduce(std::vector<Coeff>& wide) const {
  for (int k = static_cast<int>(wide.size()) - 1; k >= degree_; --k) {
    Coeff a = wide[k];
    if (a == 0) continue;
    const auto& hp = high_powers_[k - degree_];
    for (int i = 0; i < degree_; ++i)
      wide[i] = checked_add(wide[i], checked_mul(a, hp[i]));
  }
  wide.resize(degree_);
}

Scalar ScalarRing::zero() const { return from_int(0); }
Scalar ScalarRing::one() const { return from_int(1); }

Scalar ScalarRing::from_int(Coeff v) const {
  Scalar::Storage c(degree_, 0);
  c[0] = v;
  return Scalar(*this, std::move(c));
}

Scalar ScalarRing::generator() const { return from_poly(IntPoly({0, 1})); }

Scalar ScalarRing::from_poly(const IntPoly& p) const {
  auto [q, r] = p.divmod_monic(minpoly_);
  Scalar::Storage c(degree_, 0);
  for (int i = 0; i < degree_; ++i) c[i] = r[i];
  return Scalar(*this, std::move(c));
}

Scalar ScalarRing::two_cos_pi_over(int m) const {
  if (m == 2) return zero();
  if (m < 2 || level_ % m != 0)
    throw InvalidLabel("label " + std::to_string(m) +
                       " does not divide ring level " +
                       std::to_string(level_));
  // 2cos(pi/m) = 2cos((L/m) pi/L) = C_{L/m}(c)
  return from_poly(chebyshev_c(level_ / m));
}

std::pair<std::string, std::string> ScalarRing::generator_bounds(
    int bits) const {
  if (level_ < 3) {
    std::string v = level_ == 1 ? "2" : "0";
    return {v, v};
  }
  Mp lo(bits), hi(bits);
  generator_enclosure(level_, lo, hi, bits);
  auto fmt = [](const Mp& m) {
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.30Rg", m.get());
    return std::string(buf);
  };
  return {fmt(lo), fmt(hi)};
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const ScalarRing& ring, Storage coeffs)
    : ring_(&ring), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != ring.degree())
    throw InternalError("Scalar: coefficient vector has wrong length");
}

void Scalar::check_ring(const Scalar& b) const {
  if (ring_ != b.ring_) throw RingMismatch("scalar operands from different rings");
}

bool Scalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Coeff v) { return v == 0; });
}

bool Scalar::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](Coeff v) { return v == 0; });
}

Sign Scalar::sign() const { return scalar_sign(*this); }

Scalar& Scalar::operator+=(const Scalar& b) {
  check_ring(b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], b.c_[i]);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  check_ring(b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], b.c_[i]);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_ring(b);
  const int d = a.ring_->degree();
  if (d == 1) {
    Scalar::Storage c(1, checked_mul(a.c_[0], b.c_[0]));
    return Scalar(*a.ring_, std::move(c));
  }
  std::vector<Coeff> wide(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      wide[i + j] = checked_add(wide[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  a.ring_->reduce(wide);
  return Scalar(*a.ring_, Scalar::Storage(wide.begin(), wide.end()));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& v : r.c_) v = checked_sub(0, v);
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_ring(b);
  return std::equal(a.c_.begin(), a.c_.end(), b.c_.begin());
}

std::strong_ordering lex_compare(const Scalar& a, const Scalar& b) {
  a.check_ring(b);
  return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(),
                                                b.c_.begin(), b.c_.end());
}

std::string Scalar::str() const {
  std::vector<Coeff> v(c_.begin(), c_.end());
  return IntPoly(std::move(v)).str('c');
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

Sign scalar_sign(const Scalar& a) {
  const auto c = a.coeffs();
  if (a.is_zero()) return Sign::Zero;
  if (a.ring().degree() == 1) return c[0] > 0 ? Sign::Positive : Sign::Negative;
  return certified_sign(a.ring().level(), c);
}

}  // namespace vartin
