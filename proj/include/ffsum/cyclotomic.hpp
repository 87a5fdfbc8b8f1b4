#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N), the value ring for all
// character sums. Elements live in the power basis 1, z, ..., z^{phi(N)-1}
// reduced modulo the N-th cyclotomic polynomial with exact rational
// coefficients, so equality is canonical and decidable. Identities are
// checked with exact equality; complex embeddings exist only for
// root-magnitude measurements.

#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include "ffsum/common.hpp"

namespace ffsum {

inline constexpr i64 kMaxCyclotomicOrder = 10000;

inline i64 totient(i64 n) {
  if (n < 1) throw std::invalid_argument("totient: n must be >= 1");
  i64 result = n;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

// Exact division of integer polynomials, divisor monic, remainder must be 0.
inline std::vector<BigInt> zpoly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const auto dn = static_cast<int>(num.size()) - 1;
  const auto dd = static_cast<int>(den.size()) - 1;
  std::vector<BigInt> quot(static_cast<size_t>(dn - dd + 1));
  for (int i = dn; i >= dd; --i) {
    const BigInt c = num[static_cast<size_t>(i)];
    quot[static_cast<size_t>(i - dd)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) num[static_cast<size_t>(i - dd + j)] -= c * den[static_cast<size_t>(j)];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("zpoly_div_exact: division is not exact");
  return quot;
}

}  // namespace detail

/// N-th cyclotomic polynomial, ascending integer coefficients, computed by
/// dividing x^N - 1 by Phi_d over all proper divisors d | N. Memoized.
inline std::vector<BigInt> cyclotomic_polynomial(i64 N) {
  if (N < 1 || N > kMaxCyclotomicOrder)
    throw std::invalid_argument("cyclotomic_polynomial: order out of range [1, 10^4]");
  static std::map<i64, std::vector<BigInt>> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  std::vector<BigInt> f(static_cast<size_t>(N + 1));
  f[0] = -1;
  f[static_cast<size_t>(N)] = 1;
  for (i64 d = 1; d < N; ++d)
    if (N % d == 0) f = detail::zpoly_div_exact(std::move(f), cyclotomic_polynomial(d));
  {
    std::lock_guard<std::mutex> lk(mtx);
    cache.emplace(N, f);
  }
  return f;
}

/// Exact element of Q(zeta_N).
class CycloNumber {
 public:
  CycloNumber() : order_(1), c_(1) {}

  static CycloNumber zero(i64 N = 1) { return CycloNumber(N, std::vector<Rational>(static_cast<size_t>(totient(N)))); }
  static CycloNumber one(i64 N = 1) { return from_rational(1, N); }
  static CycloNumber from_rational(Rational r, i64 N = 1) {
    auto z = zero(N);
    z.c_[0] = std::move(r);
    return z;
  }
  static CycloNumber from_int(i64 v, i64 N = 1) { return from_rational(Rational(v), N); }

  /// Builds sum_i raw[i] * zeta_N^i and reduces it to canonical form.
  static CycloNumber from_power_coeffs(i64 N, std::vector<Rational> raw) {
    return CycloNumber(N, reduce(N, std::move(raw)));
  }

  i64 order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  Rational to_rational() const {
    if (!is_rational()) throw std::domain_error("to_rational: value is not rational");
    return c_[0];
  }

  /// Lifts into Q(zeta_N); requires order() | N.
  CycloNumber promoted(i64 N) const {
    if (N % order_ != 0) throw std::invalid_argument("promoted: current order must divide the target order");
    if (N == order_) return *this;
    const i64 step = N / order_;
    std::vector<Rational> raw(static_cast<size_t>((c_.size() - 1) * static_cast<size_t>(step) + 1));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * static_cast<size_t>(step)] = c_[i];
    return from_power_coeffs(N, std::move(raw));
  }

  friend CycloNumber operator+(CycloNumber a, CycloNumber b) {
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
  }
  friend CycloNumber operator-(CycloNumber a, CycloNumber b) {
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
  }
  friend CycloNumber operator*(CycloNumber a, CycloNumber b) {
    align(a, b);
    std::vector<Rational> raw(2 * a.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        raw[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return from_power_coeffs(a.order_, std::move(raw));
  }
  CycloNumber operator-() const {
    CycloNumber r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  CycloNumber scaled(const Rational& s) const {
    CycloNumber r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    const i64 l = std::lcm(a.order_, b.order_);
    return a.promoted(l).c_ == b.promoted(l).c_;
  }
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

  /// Evaluates the power basis at exp(2*pi*i/N). Error stays below
  /// phi(N) * max|coeff| * 2^-50 at the sizes used here.
  std::complex<double> embed() const {
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const double ang = two_pi * static_cast<double>(i) / static_cast<double>(order_);
      acc += c_[i].convert_to<double>() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
  }

 private:
  CycloNumber(i64 N, std::vector<Rational> canonical) : order_(N), c_(std::move(canonical)) {}

  static std::vector<Rational> reduce(i64 N, std::vector<Rational> raw) {
    const auto phi = static_cast<size_t>(totient(N));
    const auto Phi = cyclotomic_polynomial(N);
    if (raw.size() < phi) raw.resize(phi);
    for (size_t i = raw.size(); i-- > phi;) {
      if (raw[i] == 0) continue;
      const Rational c = raw[i];
      raw[i] = 0;
      for (size_t j = 0; j < phi; ++j)
        if (Phi[j] != 0) raw[i - phi + j] -= c * Rational(Phi[j]);
    }
    raw.resize(phi);
    return raw;
  }

  // Auto-promotes when one order divides the other; anything else needs an
  // explicit promoted() call from the caller.
  static void align(CycloNumber& a, CycloNumber& b) {
    if (a.order_ == b.order_) return;
    if (a.order_ % b.order_ == 0) {
      b = b.promoted(a.order_);
    } else if (b.order_ % a.order_ == 0) {
      a = a.promoted(b.order_);
    } else {
      throw std::invalid_argument("CycloNumber: incompatible cyclotomic orders; promote to a common multiple first");
    }
  }

  i64 order_;
  std::vector<Rational> c_;
};

/// zeta_N^(k mod N) in canonical form.
inline CycloNumber root_of_unity_power(i64 N, i64 k) {
  if (N < 1) throw std::invalid_argument("root_of_unity_power: N must be >= 1");
  k = mod_reduce(k, N);
  std::vector<Rational> raw(static_cast<size_t>(k + 1));
  raw[static_cast<size_t>(k)] = 1;
  return CycloNumber::from_power_coeffs(N, std::move(raw));
}

/// sum_r counts[r] * zeta_N^r — the assembly step of every character sum.
inline CycloNumber cyclo_from_counts(i64 N, const std::vector<i64>& counts) {
  std::vector<Rational> raw(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) raw[i] = Rational(counts[i]);
  return CycloNumber::from_power_coeffs(N, std::move(raw));
}

inline CycloNumber div_exact(const CycloNumber& z, i64 n) {
  if (n == 0) throw std::domain_error("div_exact: division by zero");
  return z.scaled(Rational(1, n));
}

}  // namespace ffsum
