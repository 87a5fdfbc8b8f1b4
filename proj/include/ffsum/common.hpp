#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ffsum {

using i64 = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Ceilings for exhaustive sweeps. Anything past these is a typo, not a
// workload: the toolkit targets desk-scale fields.
inline constexpr i64 kEnumBound = i64{1} << 22;   // element sweeps over F_{q^s}
inline constexpr i64 kTableBound = i64{1} << 20;  // discrete-log tables over F_q

inline i64 mod_reduce(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

/// Inverse of a modulo p, for gcd(a, p) = 1.
inline i64 mod_inverse(i64 a, i64 p) {
  a = mod_reduce(a, p);
  if (a == 0) throw std::domain_error("mod_inverse: 0 is not invertible");
  i64 t = 0, t1 = 1, r = p, r1 = a;
  while (r1 != 0) {
    const i64 q = r / r1;
    const i64 tn = t - q * t1;
    t = t1;
    t1 = tn;
    const i64 rn = r - q * r1;
    r = r1;
    r1 = rn;
  }
  if (r != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
  return mod_reduce(t, p);
}

/// Deterministic primality test by trial division.
inline bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline i64 checked_ipow(i64 b, i64 e) {
  if (b <= 0 || e < 0) throw std::invalid_argument("checked_ipow: wants b > 0, e >= 0");
  i64 r = 1;
  for (i64 i = 0; i < e; ++i) {
    if (r > std::numeric_limits<i64>::max() / b) throw std::overflow_error("checked_ipow: overflow");
    r *= b;
  }
  return r;
}

inline BigInt factorial(i64 n) {
  BigInt r = 1;
  for (i64 i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Exact division by a nonzero integer; overloads for other coefficient
/// rings live next to those rings.
inline Rational div_exact(const Rational& r, i64 n) {
  if (n == 0) throw std::domain_error("div_exact: division by zero");
  return r / n;
}

}  // namespace ffsum
