#pragma once

// Characters of F_q, their liftings to F_{q^s} through trace and norm, and
// exact brute-force evaluation of the exponential sums built from them.
//
// Every sum is assembled by counting how often each character-argument
// residue occurs and then forming sum_r count[r] * zeta^r once, so the
// enumeration loop stays in plain integer field arithmetic and the result
// is exact regardless of how the sweep is ordered or partitioned.

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "ffsum/cyclotomic.hpp"
#include "ffsum/gf.hpp"

namespace ffsum {

/// An additive character chi_a (twist a in F_q) or a multiplicative
/// character psi_j (psi_j(g^k) = zeta_{q-1}^{jk}), with psi(0) = 0.
class CharacterSpec {
 public:
  enum class Kind { additive, multiplicative };

  static CharacterSpec additive(const FieldSpec& field, const FieldElement& twist) {
    if (twist.owner() != field) throw std::invalid_argument("CharacterSpec: twist from a different field");
    CharacterSpec c;
    c.kind_ = Kind::additive;
    c.field_ = field;
    c.twist_ = twist;
    return c;
  }
  static CharacterSpec additive(const FieldSpec& field) { return additive(field, field.one()); }
  static CharacterSpec multiplicative(const FieldSpec& field, i64 exponent, i64 table_bound = kTableBound) {
    CharacterSpec c;
    c.kind_ = Kind::multiplicative;
    c.field_ = field;
    c.twist_ = field.zero();
    c.exponent_ = mod_reduce(exponent, field.q() - 1);
    c.dlog_ = std::make_shared<DlogTable>(generator_dlog(field, table_bound));
    return c;
  }

  Kind kind() const { return kind_; }
  const FieldSpec& field() const { return field_; }
  const FieldElement& twist() const { return twist_; }
  i64 exponent() const { return exponent_; }
  const DlogTable& dlog() const { return *dlog_; }

  /// p for additive characters, (q-1)/gcd(j, q-1) for multiplicative ones.
  i64 order() const {
    if (kind_ == Kind::additive) return field_.p();
    const i64 n = field_.q() - 1;
    return n / std::gcd(exponent_ == 0 ? n : exponent_, n);
  }
  bool is_trivial() const { return kind_ == Kind::additive ? twist_.is_zero() : exponent_ == 0; }

 private:
  Kind kind_ = Kind::additive;
  FieldSpec field_;
  FieldElement twist_;
  i64 exponent_ = 0;
  std::shared_ptr<const DlogTable> dlog_;
};

/// chi^{(s)}(c) = zeta_p^{Tr(a * Tr_rel(c))}, the lifting through the
/// relative trace; s = 1 reduces to chi_a on F_q itself.
inline CycloNumber additive_char_eval(const CharacterSpec& chi, const TowerContext& ctx, const FieldElement& c) {
  if (chi.kind() != CharacterSpec::Kind::additive) throw std::invalid_argument("additive_char_eval: wants an additive character");
  if (chi.field() != ctx.base()) throw std::invalid_argument("additive_char_eval: character and tower base differ");
  const FieldElement tr = trace_to_base(ctx, c);
  const i64 t = absolute_trace(chi.twist() * tr);
  return root_of_unity_power(ctx.base().p(), t);
}

/// psi^{(s)}(c) = psi(Norm(c)) for c != 0, and 0 at c = 0.
inline CycloNumber mult_char_eval(const CharacterSpec& psi, const TowerContext& ctx, const FieldElement& c) {
  if (psi.kind() != CharacterSpec::Kind::multiplicative) throw std::invalid_argument("mult_char_eval: wants a multiplicative character");
  if (psi.field() != ctx.base()) throw std::invalid_argument("mult_char_eval: character and tower base differ");
  const i64 n = ctx.base().q() - 1;
  if (c.is_zero()) return CycloNumber::zero(n);
  const i64 k = psi.dlog().log_of(norm_rel(ctx, c));
  return root_of_unity_power(n, mod_reduce(psi.exponent() * k, n));
}

/// One exact value per level s = 1..S of some exponential sum; all values
/// share one cyclotomic order.
struct SumSeries {
  std::string label;
  FieldSpec field;
  std::vector<CycloNumber> values;

  const CycloNumber& at(int s) const {
    if (s < 1 || s > static_cast<int>(values.size())) throw std::invalid_argument("SumSeries: level out of range");
    return values[static_cast<size_t>(s - 1)];
  }
};

namespace detail {

// Fast path shared by the sum sweeps: chi_a^{(s)}(x) = zeta_p^{Tr_big(a*x)}
// by trace transitivity, with the twist folded into the argument upstream.
inline void check_enum_bound(i64 size, i64 bound, const char* who) {
  if (size > bound) throw std::length_error(std::string(who) + ": enumeration bound exceeded");
}

inline std::vector<Coeffs> embed_poly(const TowerContext& ctx, const std::vector<FieldElement>& f,
                                      const FieldElement& premul) {
  std::vector<Coeffs> out;
  out.reserve(f.size());
  for (const auto& c : f) {
    if (c.owner() != ctx.base()) throw std::invalid_argument("sum: polynomial coefficient from a different field");
    out.push_back(ctx.embed_raw((premul * c).coeffs()));
  }
  return out;
}

}  // namespace detail

/// S_s(f) = sum over F_{q^s} of chi^{(s)}(f(gamma)), exact.
inline CycloNumber weil_sum(const CharacterSpec& chi, const std::vector<FieldElement>& f, int s,
                            i64 enum_bound = kEnumBound) {
  if (chi.kind() != CharacterSpec::Kind::additive) throw std::invalid_argument("weil_sum: wants an additive character");
  if (s < 1) throw std::invalid_argument("weil_sum: s must be >= 1");
  const TowerContext ctx(chi.field(), s);
  detail::check_enum_bound(ctx.big().q(), enum_bound, "weil_sum");
  const auto& B = ctx.big().data();
  const auto fc = detail::embed_poly(ctx, f, chi.twist());
  std::vector<i64> counts(static_cast<size_t>(ctx.base().p()), 0);
  auto gamma = B.zero();
  do {
    auto acc = B.zero();
    for (size_t i = fc.size(); i-- > 0;) {
      acc = B.mul(acc, gamma);
      acc = B.add(acc, fc[i]);
    }
    ++counts[static_cast<size_t>(B.abs_trace_of(acc))];
  } while (B.next(gamma));
  return cyclo_from_counts(ctx.base().p(), counts);
}

/// T_s(f) = sum over F_{q^s} of psi^{(s)}(f(gamma)), exact, with the
/// psi(0) = 0 convention at roots of f.
inline CycloNumber mult_sum(const CharacterSpec& psi, const std::vector<FieldElement>& f, int s,
                            i64 enum_bound = kEnumBound) {
  if (psi.kind() != CharacterSpec::Kind::multiplicative) throw std::invalid_argument("mult_sum: wants a multiplicative character");
  if (s < 1) throw std::invalid_argument("mult_sum: s must be >= 1");
  const TowerContext ctx(psi.field(), s);
  detail::check_enum_bound(ctx.big().q(), enum_bound, "mult_sum");
  const auto& B = ctx.big().data();
  const i64 n = ctx.base().q() - 1;
  const auto fc = detail::embed_poly(ctx, f, ctx.base().one());
  const i64 norm_exp = (ctx.big().q() - 1) / n;
  std::vector<i64> counts(static_cast<size_t>(n), 0);
  auto gamma = B.zero();
  do {
    auto acc = B.zero();
    for (size_t i = fc.size(); i-- > 0;) {
      acc = B.mul(acc, gamma);
      acc = B.add(acc, fc[i]);
    }
    if (B.is_zero(acc)) continue;
    const FieldElement nm = ctx.to_base(FieldElement(ctx.big(), B.pow(acc, norm_exp)));
    const i64 k = psi.dlog().log_of(nm);
    ++counts[static_cast<size_t>(mod_reduce(psi.exponent() * k, n))];
  } while (B.next(gamma));
  return cyclo_from_counts(n, counts);
}

/// G_u^{(s)}(a, b) = sum over F_{q^s}^* of chi^{(s)}(a c^u + b c^{-1}).
inline CycloNumber g_sum(i64 u, const FieldElement& a, const FieldElement& b, const CharacterSpec& chi, int s,
                         i64 enum_bound = kEnumBound) {
  if (chi.kind() != CharacterSpec::Kind::additive) throw std::invalid_argument("g_sum: wants an additive character");
  if (u < 1) throw std::invalid_argument("g_sum: u must be >= 1");
  if (a.owner() != chi.field() || b.owner() != chi.field())
    throw std::invalid_argument("g_sum: parameters from a different field");
  if (a.is_zero())
    throw std::invalid_argument("g_sum: a = 0 is outside the sum family; the a = 0 value is the sequence-layer convention G_u(0) = -1");
  if (s < 1) throw std::invalid_argument("g_sum: s must be >= 1");
  const TowerContext ctx(chi.field(), s);
  detail::check_enum_bound(ctx.big().q(), enum_bound, "g_sum");
  const auto& B = ctx.big().data();
  const auto ea = ctx.embed_raw((chi.twist() * a).coeffs());
  const auto eb = ctx.embed_raw((chi.twist() * b).coeffs());
  std::vector<i64> counts(static_cast<size_t>(ctx.base().p()), 0);
  auto c = B.zero();
  while (B.next(c)) {
    const auto cu = B.pow(c, u);
    const auto ci = B.inv(c);
    const auto arg = B.add(B.mul(ea, cu), B.mul(eb, ci));
    ++counts[static_cast<size_t>(B.abs_trace_of(arg))];
  }
  return cyclo_from_counts(ctx.base().p(), counts);
}

/// G^{(s)}(f, g) = sum over F_{q^s}^* of chi^{(s)}(f(c) + g(c^{-1})).
inline CycloNumber generalized_sum(const CharacterSpec& chi, const std::vector<FieldElement>& f,
                                   const std::vector<FieldElement>& g, int s, i64 enum_bound = kEnumBound) {
  if (chi.kind() != CharacterSpec::Kind::additive) throw std::invalid_argument("generalized_sum: wants an additive character");
  if (s < 1) throw std::invalid_argument("generalized_sum: s must be >= 1");
  const TowerContext ctx(chi.field(), s);
  detail::check_enum_bound(ctx.big().q(), enum_bound, "generalized_sum");
  const auto& B = ctx.big().data();
  const auto fc = detail::embed_poly(ctx, f, chi.twist());
  const auto gc = detail::embed_poly(ctx, g, chi.twist());
  std::vector<i64> counts(static_cast<size_t>(ctx.base().p()), 0);
  auto c = B.zero();
  auto horner = [&B](const std::vector<detail::Coeffs>& poly, const detail::Coeffs& x) {
    auto acc = B.zero();
    for (size_t i = poly.size(); i-- > 0;) {
      acc = B.mul(acc, x);
      acc = B.add(acc, poly[i]);
    }
    return acc;
  };
  while (B.next(c)) {
    const auto ci = B.inv(c);
    const auto arg = B.add(horner(fc, c), horner(gc, ci));
    ++counts[static_cast<size_t>(B.abs_trace_of(arg))];
  }
  return cyclo_from_counts(ctx.base().p(), counts);
}

/// Gauss sum g(eta, chi) = sum_{c != 0} eta(c) chi(c) of the quadratic
/// character eta, exact in Q(zeta_p); |g|^2 = q.
inline CycloNumber gauss_quadratic(const FieldSpec& field, const CharacterSpec& chi,
                                   i64 table_bound = kTableBound) {
  if (field.q() % 2 == 0) throw std::domain_error("gauss_quadratic: q must be odd");
  if (chi.kind() != CharacterSpec::Kind::additive || chi.field() != field)
    throw std::invalid_argument("gauss_quadratic: wants an additive character of the same field");
  const auto dl = generator_dlog(field, table_bound);
  std::vector<i64> deltas(static_cast<size_t>(field.p()), 0);
  for (i64 k = 0; k < field.q() - 1; ++k) {
    const auto& c = dl.power[static_cast<size_t>(k)];
    const i64 t = absolute_trace(chi.twist() * c);
    deltas[static_cast<size_t>(t)] += (k % 2 == 0) ? 1 : -1;
  }
  return cyclo_from_counts(field.p(), deltas);
}

/// Quadratic-character value eta(c) = +1/-1 for c != 0.
inline int quadratic_character(const DlogTable& dl, const FieldElement& c) {
  return dl.log_of(c) % 2 == 0 ? 1 : -1;
}

inline SumSeries weil_series(const CharacterSpec& chi, const std::vector<FieldElement>& f, int smax,
                             i64 enum_bound = kEnumBound) {
  SumSeries out{"S_s(f)", chi.field(), {}};
  out.values.reserve(static_cast<size_t>(smax));
  for (int s = 1; s <= smax; ++s) out.values.push_back(weil_sum(chi, f, s, enum_bound));
  return out;
}

inline SumSeries mult_series(const CharacterSpec& psi, const std::vector<FieldElement>& f, int smax,
                             i64 enum_bound = kEnumBound) {
  SumSeries out{"T_s(f)", psi.field(), {}};
  out.values.reserve(static_cast<size_t>(smax));
  for (int s = 1; s <= smax; ++s) out.values.push_back(mult_sum(psi, f, s, enum_bound));
  return out;
}

inline SumSeries g_series(i64 u, const FieldElement& a, const FieldElement& b, const CharacterSpec& chi, int smax,
                          i64 enum_bound = kEnumBound) {
  SumSeries out{"G_u^(s)(a,b)", chi.field(), {}};
  out.values.reserve(static_cast<size_t>(smax));
  for (int s = 1; s <= smax; ++s) out.values.push_back(g_sum(u, a, b, chi, s, enum_bound));
  return out;
}

inline SumSeries generalized_series(const CharacterSpec& chi, const std::vector<FieldElement>& f,
                                    const std::vector<FieldElement>& g, int smax, i64 enum_bound = kEnumBound) {
  SumSeries out{"G^(s)(f,g)", chi.field(), {}};
  out.values.reserve(static_cast<size_t>(smax));
  for (int s = 1; s <= smax; ++s) out.values.push_back(generalized_sum(chi, f, g, s, enum_bound));
  return out;
}

}  // namespace ffsum
