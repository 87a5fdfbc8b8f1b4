#pragma once

// Integer-valued sequences G_a = (G_u(a x, 1))_{x in F_q^*} over
// characteristic-2 fields, their autocorrelation and cross-correlation, and
// the convolution identity. Sequences are indexed in generator order
// because shifts act multiplicatively. The off-family value is pinned to
// G_u(0) = -1, the sum of chi(c^{-1}) over nonzero c.

#include <memory>
#include <numeric>
#include <vector>

#include "ffsum/charsum.hpp"

namespace ffsum {

namespace detail {

inline void check_seq_args(const FieldSpec& field, i64 u) {
  if (field.p() != 2) throw std::domain_error("seqcorr: the sequence construction needs characteristic 2");
  if (u < 1 || std::gcd(u, field.q() - 1) != 1)
    throw std::invalid_argument("seqcorr: u must be a positive integer coprime to q-1");
}

}  // namespace detail

/// G_u(y) = G_u(y, 1) as a plain integer, with the extension G_u(0) = -1.
inline i64 gu_value(const FieldSpec& field, i64 u, const FieldElement& y, i64 enum_bound = kEnumBound) {
  detail::check_seq_args(field, u);
  if (y.owner() != field) throw std::invalid_argument("gu_value: element from a different field");
  if (y.is_zero()) return -1;
  const auto chi = CharacterSpec::additive(field);
  const auto z = g_sum(u, y, field.one(), chi, 1, enum_bound);
  const Rational r = z.to_rational();
  if (denominator(r) != 1) throw std::logic_error("gu_value: sum is not an integer");
  return numerator(r).convert_to<i64>();
}

namespace detail {

// Table of G_u(y) over all of F_q, indexed by element index; entry 0 is the
// G_u(0) = -1 convention.
inline std::vector<i64> gu_table(const FieldSpec& field, i64 u, i64 enum_bound) {
  std::vector<i64> t(static_cast<size_t>(field.q()));
  t[0] = -1;
  for (i64 idx = 1; idx < field.q(); ++idx) t[static_cast<size_t>(idx)] = gu_value(field, u, field.from_index(idx), enum_bound);
  return t;
}

}  // namespace detail

/// The sequence G_a over F_q^* in generator order.
struct SequenceProfile {
  FieldSpec field;
  i64 u = 1;
  FieldElement a;
  std::vector<i64> values;  // values[k] = G_u(a g^k)
  std::shared_ptr<const DlogTable> dlog;
};

inline SequenceProfile sequence_values(const FieldSpec& field, i64 u, const FieldElement& a,
                                       i64 enum_bound = kEnumBound) {
  detail::check_seq_args(field, u);
  if (a.owner() != field) throw std::invalid_argument("sequence_values: element from a different field");
  if (a.is_zero()) throw std::invalid_argument("sequence_values: a must be nonzero");
  SequenceProfile prof{field, u, a, {}, std::make_shared<DlogTable>(generator_dlog(field))};
  const auto table = detail::gu_table(field, u, enum_bound);
  prof.values.reserve(static_cast<size_t>(field.q() - 1));
  for (i64 k = 0; k < field.q() - 1; ++k) {
    const FieldElement x = prof.dlog->power[static_cast<size_t>(k)];
    prof.values.push_back(table[static_cast<size_t>((a * x).index())]);
  }
  return prof;
}

/// sum_x G_u(a x) G_u(b h x) over x in F_q^*; autocorrelation is a = b.
inline i64 correlation(const SequenceProfile& A, const SequenceProfile& B, const FieldElement& h) {
  if (A.field != B.field || A.u != B.u) throw std::invalid_argument("correlation: profiles are not comparable");
  if (h.owner() != A.field) throw std::invalid_argument("correlation: shift from a different field");
  if (h.is_zero()) throw std::invalid_argument("correlation: shift must be nonzero");
  const i64 n = A.field.q() - 1;
  const i64 shift = A.dlog->log_of(h);
  i64 acc = 0;
  for (i64 k = 0; k < n; ++k)
    acc += A.values[static_cast<size_t>(k)] * B.values[static_cast<size_t>((k + shift) % n)];
  return acc;
}

/// Both sides of the convolution identity
///   sum_x G_u(ax) G_u(b(c-x)) = q G_u(c (a^{u'} + b^{u'})^u) + G_u(bc),
/// u u' = 1 mod q-1, reported rather than asserted.
struct ConvolutionCheck {
  i64 lhs = 0;
  i64 rhs = 0;
  bool equal = false;
};

inline ConvolutionCheck convolution_identity_check(const FieldSpec& field, i64 u, const FieldElement& a,
                                                   const FieldElement& b, const FieldElement& c,
                                                   i64 enum_bound = kEnumBound) {
  detail::check_seq_args(field, u);
  if (a.is_zero() || b.is_zero() || c.is_zero())
    throw std::invalid_argument("convolution_identity_check: a, b, c must be nonzero");
  const auto table = detail::gu_table(field, u, enum_bound);
  auto gu = [&](const FieldElement& y) { return table[static_cast<size_t>(y.index())]; };
  ConvolutionCheck out;
  for (i64 idx = 1; idx < field.q(); ++idx) {
    const FieldElement x = field.from_index(idx);
    out.lhs += gu(a * x) * gu(b * (c - x));
  }
  const i64 n = field.q() - 1;
  const i64 uprime = (n == 1) ? 0 : mod_inverse(u, n);
  const FieldElement base = a.pow(uprime) + b.pow(uprime);
  const FieldElement scaled = c * base.pow(u);
  out.rhs = field.q() * gu(scaled) + gu(b * c);
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace ffsum
