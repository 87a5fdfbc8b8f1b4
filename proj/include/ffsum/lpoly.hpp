#pragma once

// The L-polynomial engine: the multiplicative coefficient function lambda
// on monic polynomials, its degree-k coefficient sums, construction of
// L(z) = prod (1 - omega_i z), recovery of the elementary symmetric values
// e_j(omega) from initial sums, recursion-based prediction of higher-level
// sums, numeric roots with modulus verdicts, and the closed forms for the
// u = 2 and Kloosterman families.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "ffsum/charsum.hpp"
#include "ffsum/roots.hpp"
#include "ffsum/symfun.hpp"

namespace ffsum {

/// L(z) as exact cyclotomic coefficients A_0..A_t with A_0 = 1.
struct LPolynomial {
  std::vector<CycloNumber> coeffs;
  std::string context;

  int degree() const {
    int d = static_cast<int>(coeffs.size()) - 1;
    while (d > 0 && coeffs[static_cast<size_t>(d)].is_zero()) --d;
    return d;
  }
  const CycloNumber& at(int k) const { return coeffs[static_cast<size_t>(k)]; }
};

/// Numeric roots omega_i of the reciprocal polynomial of L, so L(1/omega) = 0.
struct RootSet {
  std::vector<std::complex<double>> roots;
  double residual = 0.0;
  double tol = 0.0;
};

struct RootBoundReport {
  RootSet roots;
  double expected_modulus = 0.0;
  double max_modulus = 0.0;
  bool within_bound = true;       // every |omega| <= expected + tol
  bool all_equal_modulus = true;  // every |omega| within tol of expected
};

namespace detail {

// lambda's character-argument: a*p_u(roots of g) + b*c_{k-1}/c_k, read off
// the signed coefficients without ever factoring g. Returns false when
// c_k = 0 (where lambda vanishes).
inline bool lambda_argument(const MonicPoly& g, i64 u, const FieldElement& a, const FieldElement& b,
                            FieldElement& out) {
  const int k = g.degree();
  const FieldElement ck = g.signed_coeff(k);
  if (ck.is_zero()) return false;
  std::vector<FieldElement> e;
  e.reserve(static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j) e.push_back(g.signed_coeff(j));
  const auto p = newton_p_from_e(elementary_coeffs(k, std::move(e)), static_cast<int>(u));
  const FieldElement pu = p.values[static_cast<size_t>(u - 1)];
  out = a * pu + b * g.signed_coeff(k - 1) * ck.inv();
  return true;
}

}  // namespace detail

/// lambda(g) = chi(a*p_u + b*c_{k-1}/c_k) when c_k != 0, 0 when c_k = 0,
/// and lambda(1) = 1. Multiplicative on monic polynomials.
inline CycloNumber lambda_eval(const MonicPoly& g, i64 u, const FieldElement& a, const FieldElement& b,
                               const CharacterSpec& chi) {
  if (chi.kind() != CharacterSpec::Kind::additive) throw std::invalid_argument("lambda_eval: wants an additive character");
  if (g.field() != chi.field()) throw std::invalid_argument("lambda_eval: polynomial and character fields differ");
  if (u < 1) throw std::invalid_argument("lambda_eval: u must be >= 1");
  const i64 p = chi.field().p();
  if (g.degree() == 0) return CycloNumber::one(p);
  FieldElement arg;
  if (!detail::lambda_argument(g, u, a, b, arg)) return CycloNumber::zero(p);
  return root_of_unity_power(p, absolute_trace(chi.twist() * arg));
}

/// Sum of lambda over all q^k monic polynomials of degree k.
inline CycloNumber phi_k_sum(int k, i64 u, const FieldElement& a, const FieldElement& b, const CharacterSpec& chi,
                             i64 enum_bound = kEnumBound) {
  if (chi.kind() != CharacterSpec::Kind::additive) throw std::invalid_argument("phi_k_sum: wants an additive character");
  if (k < 0) throw std::invalid_argument("phi_k_sum: k must be >= 0");
  const FieldSpec& f = chi.field();
  const i64 p = f.p();
  if (k == 0) return CycloNumber::one(p);
  detail::check_enum_bound(checked_ipow(f.q(), k), enum_bound, "phi_k_sum");
  std::vector<i64> counts(static_cast<size_t>(p), 0);
  std::vector<FieldElement> asc(static_cast<size_t>(k + 1), f.zero());
  asc[static_cast<size_t>(k)] = f.one();
  std::vector<i64> idx(static_cast<size_t>(k), 0);
  const i64 q = f.q();
  while (true) {
    if (idx[0] != 0) {  // constant term 0 makes lambda vanish
      for (int i = 0; i < k; ++i) asc[static_cast<size_t>(i)] = f.from_index(idx[static_cast<size_t>(i)]);
      const MonicPoly g(f, asc);
      FieldElement arg;
      if (detail::lambda_argument(g, u, a, b, arg)) ++counts[static_cast<size_t>(absolute_trace(chi.twist() * arg))];
    }
    int pos = 0;
    while (pos < k && ++idx[static_cast<size_t>(pos)] == q) idx[static_cast<size_t>(pos++)] = 0;
    if (pos == k) break;
  }
  return cyclo_from_counts(p, counts);
}

/// L(z) coefficients A_k = phi_k_sum(k) for k = 0..u+1, under the vanishing
/// hypothesis gcd(u, q) = 1 or b != 0 (a != 0 throughout). verify_tail
/// additionally insists that A_{u+2} = 0.
inline LPolynomial build_lpoly(i64 u, const FieldElement& a, const FieldElement& b, const CharacterSpec& chi,
                               bool verify_tail = false, i64 enum_bound = kEnumBound) {
  if (a.is_zero()) throw std::invalid_argument("build_lpoly: a must be nonzero");
  const i64 q = chi.field().q();
  if (std::gcd(u, q) != 1 && b.is_zero())
    throw std::invalid_argument("build_lpoly: needs gcd(u, q) = 1 or b != 0 for the coefficient sums to vanish");
  LPolynomial L;
  L.context = "u=" + std::to_string(u) + " a=" + a.str() + " b=" + b.str() + " q=" + std::to_string(q);
  L.coeffs.reserve(static_cast<size_t>(u + 2));
  for (int k = 0; k <= static_cast<int>(u) + 1; ++k) L.coeffs.push_back(phi_k_sum(k, u, a, b, chi, enum_bound));
  if (verify_tail) {
    const auto tail = phi_k_sum(static_cast<int>(u) + 2, u, a, b, chi, enum_bound);
    if (!tail.is_zero()) throw std::runtime_error("build_lpoly: coefficient sum at degree u+2 did not vanish");
  }
  return L;
}

/// e_1..e_t of the roots from the first t sums, via p_j(omega) = -(sum at
/// s = j) and exact Newton inversion in characteristic zero.
inline std::vector<CycloNumber> sums_to_elementary(const SumSeries& series, int t) {
  if (t < 1 || static_cast<int>(series.values.size()) < t)
    throw std::invalid_argument("sums_to_elementary: series too short for the requested root count");
  std::vector<CycloNumber> p;
  p.reserve(static_cast<size_t>(t));
  for (int j = 1; j <= t; ++j) p.push_back(-series.at(j));
  return newton_e_from_p(power_sum_coeffs(t, std::move(p))).values;
}

/// Extends a series to level S with the recursion
/// G^{(s)} = sum_{j=1}^{s-1} (-1)^{j-1} e_j G^{(s-j)} + (-1)^s s e_s,
/// treating e_j = 0 beyond the given list.
inline SumSeries predict_sums(const std::vector<CycloNumber>& e, const SumSeries& seed, int S) {
  if (seed.values.empty()) throw std::invalid_argument("predict_sums: seed must contain at least one level");
  SumSeries out = seed;
  out.label = seed.label + " (extended by recursion)";
  const int t = static_cast<int>(e.size());
  for (int s = static_cast<int>(out.values.size()) + 1; s <= S; ++s) {
    CycloNumber acc = CycloNumber::zero();
    for (int j = 1; j <= s - 1; ++j) {
      if (j > t) break;
      const CycloNumber term = e[static_cast<size_t>(j - 1)] * out.at(s - j);
      acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    if (s <= t) {
      const CycloNumber tail = e[static_cast<size_t>(s - 1)].scaled(Rational(s));
      acc = (s % 2 == 0) ? acc + tail : acc - tail;
    }
    out.values.push_back(acc);
  }
  return out;
}

/// Numeric roots of the reciprocal polynomial of L plus the modulus
/// verdicts: within expected+tol, and all equal to expected within tol.
inline RootBoundReport roots_and_bound(const LPolynomial& L, double expected_modulus, double tol) {
  if (L.coeffs.empty() || !(L.coeffs[0] == CycloNumber::one()))
    throw std::invalid_argument("roots_and_bound: L must have constant coefficient 1");
  RootBoundReport rep;
  rep.expected_modulus = expected_modulus;
  rep.roots.tol = tol;
  const int t = L.degree();
  if (t == 0) return rep;
  // P(w) = w^t * L(1/w) is monic with the omega_i as roots
  std::vector<std::complex<double>> monic(static_cast<size_t>(t + 1));
  for (int k = 0; k <= t; ++k) monic[static_cast<size_t>(t - k)] = L.at(k).embed();
  const auto dk = durand_kerner(monic, expected_modulus);
  rep.roots.roots = dk.roots;
  double residual = 0.0;
  for (const auto& w : dk.roots) {
    std::complex<double> acc = 0.0;
    const auto z = 1.0 / w;
    for (int k = t; k >= 0; --k) acc = acc * z + L.at(k).embed();
    residual = std::max(residual, std::abs(acc));
  }
  rep.roots.residual = residual;
  if (!(residual < tol))
    throw std::runtime_error("roots_and_bound: root finding did not converge; residual " + std::to_string(residual));
  rep.max_modulus = 0.0;
  for (const auto& w : dk.roots) {
    const double m = std::abs(w);
    rep.max_modulus = std::max(rep.max_modulus, m);
    if (m > expected_modulus + tol) rep.within_bound = false;
    if (std::abs(m - expected_modulus) > tol) rep.all_equal_modulus = false;
  }
  return rep;
}

/// Closed form of L(z) for u = 2: (1, G_2(a,b), q) for even q and
/// (1, G_2(a,b), eta(a) g(eta,chi) G_2(-b^2/4a, -2a), q eta(a) g(eta,chi))
/// for odd q. Agrees with build_lpoly coefficientwise.
inline LPolynomial closed_form_u2(const FieldSpec& field, const FieldElement& a, const FieldElement& b,
                                  const CharacterSpec& chi, i64 enum_bound = kEnumBound) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("closed_form_u2: needs a != 0 and b != 0");
  if (chi.field() != field) throw std::invalid_argument("closed_form_u2: character field mismatch");
  LPolynomial L;
  L.context = "u=2 closed form, a=" + a.str() + " b=" + b.str() + " q=" + std::to_string(field.q());
  const CycloNumber g2 = g_sum(2, a, b, chi, 1, enum_bound);
  if (field.q() % 2 == 0) {
    L.coeffs = {CycloNumber::one(field.p()), g2, CycloNumber::from_int(field.q(), field.p())};
    return L;
  }
  const auto dl = generator_dlog(field);
  const int eta_a = quadratic_character(dl, a);
  const CycloNumber gauss = gauss_quadratic(field, chi);
  const CycloNumber eg = eta_a == 1 ? gauss : -gauss;
  const FieldElement four = field.from_int(4);
  const FieldElement a2 = -(b * b) / (four * a);
  const FieldElement b2 = -(field.from_int(2) * a);
  const CycloNumber inner = g_sum(2, a2, b2, chi, 1, enum_bound);
  L.coeffs = {CycloNumber::one(field.p()), g2, eg * inner, eg.scaled(Rational(field.q()))};
  return L;
}

/// Kloosterman falsification harness: brute force, the two-term recursion
/// k^{(s)} = -k^{(s-1)} k - q k^{(s-2)} with k^{(0)} = -2, and the Dickson
/// route k^{(s)} = -D_s^{(1)}(-k, q) must agree exactly.
struct KloostermanReport {
  SumSeries brute;
  std::vector<CycloNumber> recursion;
  std::vector<CycloNumber> dickson;
  bool agree = true;
  std::vector<std::string> mismatches;
};

inline KloostermanReport kloosterman_suite(const FieldSpec& field, const FieldElement& a, const FieldElement& b,
                                           int smax, i64 enum_bound = kEnumBound) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("kloosterman_suite: needs ab != 0");
  const auto chi = CharacterSpec::additive(field);
  KloostermanReport rep;
  rep.brute = g_series(1, a, b, chi, smax, enum_bound);
  const CycloNumber k1 = rep.brute.at(1);
  const CycloNumber q = CycloNumber::from_int(field.q());
  CycloNumber prev = CycloNumber::from_int(-2);  // k^{(0)}
  CycloNumber cur = k1;
  rep.recursion.push_back(cur);
  for (int s = 2; s <= smax; ++s) {
    const CycloNumber next = -(cur * k1) - q * prev;
    prev = cur;
    cur = next;
    rep.recursion.push_back(cur);
  }
  const DicksonInput<CycloNumber> din{{-k1}, q};
  for (int s = 1; s <= smax; ++s)
    rep.dickson.push_back(-dickson_d1_recurrence(din, s, CycloNumber::one(field.p())));
  for (int s = 1; s <= smax; ++s) {
    const auto& bf = rep.brute.at(s);
    if (!(rep.recursion[static_cast<size_t>(s - 1)] == bf))
      rep.mismatches.push_back("s=" + std::to_string(s) + ": recursion != brute force");
    if (!(rep.dickson[static_cast<size_t>(s - 1)] == bf))
      rep.mismatches.push_back("s=" + std::to_string(s) + ": Dickson route != brute force");
  }
  rep.agree = rep.mismatches.empty();
  return rep;
}

/// Two-polynomial pipeline: brute-force G^{(s)}(f, g) up to s = m+n, derive
/// e_1..e_{m+n}, predict further levels, compare against brute force, and
/// (when gcd(m+n, q) = 1) check the sqrt(q) root bound.
struct GeneralizedReport {
  SumSeries brute;
  std::vector<CycloNumber> elementary;
  SumSeries predicted;
  bool sums_match = true;
  bool bound_checked = false;
  RootBoundReport bound;
  std::vector<std::string> mismatches;
};

inline int poly_degree_of(const std::vector<FieldElement>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (!f[static_cast<size_t>(i)].is_zero()) return i;
  return -1;
}

inline GeneralizedReport generalized_suite(const CharacterSpec& chi, const std::vector<FieldElement>& f,
                                           const std::vector<FieldElement>& g, int smax, double tol = 1e-6,
                                           i64 enum_bound = kEnumBound) {
  const int m = poly_degree_of(f);
  const int n = poly_degree_of(g);
  if (m < 1 || n < 1) throw std::invalid_argument("generalized_suite: both polynomials need degree >= 1");
  const i64 q = chi.field().q();
  if (std::gcd(static_cast<i64>(m), q) != 1 && std::gcd(static_cast<i64>(n), q) != 1)
    throw std::invalid_argument("generalized_suite: needs gcd(m, q) = 1 or gcd(n, q) = 1");
  const int t = m + n;
  if (smax < t) throw std::invalid_argument("generalized_suite: smax must reach m+n");
  GeneralizedReport rep;
  rep.brute = generalized_series(chi, f, g, smax, enum_bound);
  SumSeries seed = rep.brute;
  seed.values.resize(static_cast<size_t>(t));
  rep.elementary = sums_to_elementary(seed, t);
  rep.predicted = predict_sums(rep.elementary, seed, smax);
  for (int s = t + 1; s <= smax; ++s)
    if (!(rep.predicted.at(s) == rep.brute.at(s))) {
      rep.sums_match = false;
      rep.mismatches.push_back("s=" + std::to_string(s) + ": prediction != brute force");
    }
  if (std::gcd(static_cast<i64>(t), q) == 1) {
    rep.bound_checked = true;
    LPolynomial L;
    L.context = "from elementary values of G^(s)(f,g)";
    L.coeffs.push_back(CycloNumber::one(chi.field().p()));
    for (int j = 1; j <= t; ++j) {
      CycloNumber aj = rep.elementary[static_cast<size_t>(j - 1)];
      if (j % 2 == 1) aj = -aj;
      L.coeffs.push_back(aj);
    }
    rep.bound = roots_and_bound(L, std::sqrt(static_cast<double>(q)), tol);
    if (!rep.bound.within_bound) rep.mismatches.push_back("a root exceeds sqrt(q) + tol");
  }
  return rep;
}

}  // namespace ffsum
