#pragma once

// Exact phases in Q/Z and exact cyclotomic numbers built from them.

#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tqft/errors.hpp"
#include "tqft/rational.hpp"

namespace tqft {

/// An element of Q/Z stored as num/den with 0 <= num < den and gcd(num, den) = 1.
class PhaseQ {
 public:
  constexpr PhaseQ() = default;

  PhaseQ(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(Errc::BadInput, "phase with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    if (num_ == 0) den_ = 1;
  }

  static PhaseQ from_rational(const Rational& r) {
    const BigInt d = boost::multiprecision::denominator(r);
    BigInt n = boost::multiprecision::numerator(r) % d;
    if (n < 0) n += d;
    return PhaseQ(n.convert_to<std::int64_t>(), d.convert_to<std::int64_t>());
  }

  /// Parses "p/q" or "p" (reduced mod 1).
  static PhaseQ parse(const std::string& text) { return from_rational(parse_rational(text)); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  /// Representative in [0, 1).
  Rational value() const { return make_rational(num_, den_); }
  double turns() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  PhaseQ operator-() const { return PhaseQ(-num_, den_); }

  friend PhaseQ operator+(PhaseQ a, PhaseQ b) {
    const std::int64_t l = std::lcm(a.den_, b.den_);
    const __int128 n = static_cast<__int128>(a.num_) * (l / a.den_) +
                       static_cast<__int128>(b.num_) * (l / b.den_);
    return PhaseQ(static_cast<std::int64_t>(n % l), l);
  }
  friend PhaseQ operator-(PhaseQ a, PhaseQ b) { return a + (-b); }
  PhaseQ& operator+=(PhaseQ b) { return *this = *this + b; }
  PhaseQ& operator-=(PhaseQ b) { return *this = *this - b; }

  PhaseQ times(std::int64_t k) const {
    const __int128 n = static_cast<__int128>(num_) * k;
    return PhaseQ(static_cast<std::int64_t>(n % den_), den_);
  }

  friend bool operator==(PhaseQ a, PhaseQ b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(PhaseQ a, PhaseQ b) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

namespace detail {

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
inline std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  static std::recursive_mutex mutex;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<std::int64_t> q = cyclotomic_polynomial(d);
    const std::size_t dq = q.size() - 1;
    std::vector<std::int64_t> quotient(p.size() - dq, 0);
    for (std::size_t i = p.size(); i-- > dq;) {
      const std::int64_t c = p[i];  // q is monic
      quotient[i - dq] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
    }
    p = std::move(quotient);
  }
  cache.emplace(n, p);
  return p;
}

}  // namespace detail

/// A finite rational combination of roots of unity, sum_k c_k exp(2 pi i phi_k).
///
/// The stored terms are a representation, not a normal form: equality is
/// decided in the cyclotomic field by reducing the difference modulo the
/// cyclotomic polynomial of the common conductor.
class PhaseSum {
 public:
  using Terms = std::map<PhaseQ, Rational>;

  PhaseSum() = default;
  explicit PhaseSum(const Rational& r) { add_term(PhaseQ(), r); }
  explicit PhaseSum(PhaseQ phase, const Rational& coeff = Rational(1)) { add_term(phase, coeff); }

  static PhaseSum zero() { return PhaseSum(); }
  static PhaseSum one() { return PhaseSum(Rational(1)); }

  /// Sums `count * exp(2 pi i phase)` over a histogram, then scales.
  static PhaseSum from_counts(const std::map<PhaseQ, std::int64_t>& counts, const Rational& scale) {
    PhaseSum s;
    for (const auto& [phase, count] : counts) s.add_term(phase, Rational(count) * scale);
    return s;
  }

  const Terms& terms() const { return terms_; }

  void add_term(PhaseQ phase, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(phase, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PhaseSum& operator+=(const PhaseSum& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  PhaseSum& operator-=(const PhaseSum& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
  }
  friend PhaseSum operator+(PhaseSum a, const PhaseSum& b) { return a += b; }
  friend PhaseSum operator-(PhaseSum a, const PhaseSum& b) { return a -= b; }

  friend PhaseSum operator*(const PhaseSum& a, const PhaseSum& b) {
    PhaseSum out;
    for (const auto& [p, c] : a.terms_)
      for (const auto& [q, d] : b.terms_) out.add_term(p + q, c * d);
    return out;
  }
  friend PhaseSum operator*(PhaseSum a, const Rational& r) {
    if (r == 0) return PhaseSum();
    for (auto& [p, c] : a.terms_) c *= r;
    return a;
  }
  friend PhaseSum operator*(const Rational& r, PhaseSum a) { return std::move(a) * r; }

  /// Complex conjugate: negates every phase.
  PhaseSum conj() const {
    PhaseSum out;
    for (const auto& [p, c] : terms_) out.add_term(-p, c);
    return out;
  }

  std::int64_t conductor() const {
    std::int64_t n = 1;
    for (const auto& [p, c] : terms_) n = std::lcm(n, p.den());
    return n;
  }

  /// Representation reduced modulo the cyclotomic polynomial of the conductor;
  /// a value that is rational reduces to a single phase-0 term.
  PhaseSum reduced() const {
    PhaseSum cur = *this;
    for (;;) {
      const std::int64_t n = cur.conductor();
      if (n == 1) return cur;
      const auto phi = detail::cyclotomic_polynomial(n);
      const std::size_t deg = phi.size() - 1;
      std::vector<Rational> poly(n);
      for (const auto& [p, c] : cur.terms_) poly[p.num() * (n / p.den())] += c;
      for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0) continue;
        const Rational c = poly[i];
        for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * phi[j];
      }
      PhaseSum next;
      for (std::size_t k = 0; k < deg; ++k) next.add_term(PhaseQ(static_cast<std::int64_t>(k), n), poly[k]);
      if (next.conductor() == n || next.terms_ == cur.terms_) return next;
      cur = std::move(next);
    }
  }

  bool is_zero() const { return reduced().terms_.empty(); }
  bool is_rational() const {
    const PhaseSum r = reduced();
    return r.terms_.empty() || (r.terms_.size() == 1 && r.terms_.begin()->first.is_zero());
  }
  /// Only meaningful when is_rational().
  Rational rational_value() const {
    const PhaseSum r = reduced();
    if (r.terms_.empty()) return Rational(0);
    if (!is_rational()) throw Error(Errc::BadInput, "value is not rational");
    return r.terms_.begin()->second;
  }

  friend bool operator==(const PhaseSum& a, const PhaseSum& b) { return (a - b).is_zero(); }

  std::complex<double> to_complex() const {
    std::complex<double> z = 0.0;
    for (const auto& [p, c] : terms_)
      z += to_double(c) * std::polar(1.0, 2.0 * std::numbers::pi * p.turns());
    return z;
  }

  /// Human-readable exact rendering, e.g. "1/6" or "1/2 + 1/2*e(1/4)".
  std::string str() const {
    const PhaseSum r = reduced();
    if (r.terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : r.terms_) {
      if (!s.empty()) s += " + ";
      s += to_string(c);
      if (!p.is_zero()) s += "*e(" + p.str() + ")";
    }
    return s;
  }

 private:
  Terms terms_;
};

}  // namespace tqft
