#pragma once

// Exact arithmetic in GF(p^e): canonical field construction, extension
// towers with explicit embeddings, traces, norms and discrete logarithms.
//
// Conventions that keep runs reproducible across machines:
//   - the modulus of GF(p^e) is the lexicographically smallest monic
//     irreducible of degree e (ascending coefficient tuple read as a
//     base-p integer), degree-1 fields use the modulus x;
//   - "smallest element" always means smallest coefficient tuple in that
//     same base-p order, which is also the enumeration order.
//
// Everything is immutable after construction. FieldSpec is a cheap value
// handle (shared internals); FieldElement carries its owner so mixed-field
// operands are rejected instead of silently misread.

#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "ffsum/common.hpp"

namespace ffsum {

namespace detail {

// Dense GF(p)[x] helpers on ascending coefficient vectors.
using Coeffs = std::vector<i64>;

inline int poly_degree(const Coeffs& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

inline Coeffs poly_trim(Coeffs a) {
  a.resize(static_cast<size_t>(poly_degree(a) + 1));
  return a;
}

inline Coeffs poly_mul(const Coeffs& a, const Coeffs& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

// Remainder of a mod b; b must be nonzero.
inline Coeffs poly_mod(Coeffs a, const Coeffs& b, i64 p) {
  const int db = poly_degree(b);
  const i64 lead_inv = mod_inverse(b[static_cast<size_t>(db)], p);
  for (int i = poly_degree(a); i >= db; i = poly_degree(a)) {
    const i64 c = (a[static_cast<size_t>(i)] * lead_inv) % p;
    for (int j = 0; j <= db; ++j) {
      auto& slot = a[static_cast<size_t>(i - db + j)];
      slot = mod_reduce(slot - c * b[static_cast<size_t>(j)], p);
    }
  }
  return poly_trim(std::move(a));
}

// Arithmetic tables and raw element ops for one field. Element "Fv"
// vectors always have exactly e entries in [0, p).
struct FieldData {
  i64 p = 0;
  int e = 0;
  i64 q = 0;
  Coeffs modulus;               // ascending, monic, size e+1
  std::vector<i64> abs_trace;   // abs_trace[i] = Tr(t^i) in GF(p)

  using Fv = Coeffs;

  Fv zero() const { return Fv(static_cast<size_t>(e), 0); }
  Fv one() const {
    Fv v = zero();
    v[0] = 1;
    return v;
  }
  Fv from_int(i64 c) const {
    Fv v = zero();
    v[0] = mod_reduce(c, p);
    return v;
  }
  bool is_zero(const Fv& a) const {
    for (i64 c : a)
      if (c != 0) return false;
    return true;
  }

  Fv add(const Fv& a, const Fv& b) const {
    Fv r(a);
    for (int i = 0; i < e; ++i) r[static_cast<size_t>(i)] = mod_reduce(r[static_cast<size_t>(i)] + b[static_cast<size_t>(i)], p);
    return r;
  }
  Fv sub(const Fv& a, const Fv& b) const {
    Fv r(a);
    for (int i = 0; i < e; ++i) r[static_cast<size_t>(i)] = mod_reduce(r[static_cast<size_t>(i)] - b[static_cast<size_t>(i)], p);
    return r;
  }
  Fv neg(const Fv& a) const {
    Fv r(a);
    for (auto& c : r) c = mod_reduce(-c, p);
    return r;
  }

  Fv mul(const Fv& a, const Fv& b) const {
    std::vector<i64> t(static_cast<size_t>(2 * e - 1), 0);
    for (int i = 0; i < e; ++i) {
      if (a[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; j < e; ++j)
        t[static_cast<size_t>(i + j)] = (t[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]) % p;
    }
    // reduce by the monic modulus
    for (int i = 2 * e - 2; i >= e; --i) {
      const i64 c = t[static_cast<size_t>(i)];
      if (c == 0) continue;
      t[static_cast<size_t>(i)] = 0;
      for (int j = 0; j < e; ++j) {
        auto& slot = t[static_cast<size_t>(i - e + j)];
        slot = mod_reduce(slot - c * modulus[static_cast<size_t>(j)], p);
      }
    }
    t.resize(static_cast<size_t>(e));
    return t;
  }

  Fv pow(Fv base, i64 n) const {
    if (n < 0) throw std::invalid_argument("pow: exponent must be non-negative");
    Fv r = one();
    while (n > 0) {
      if (n & 1) r = mul(r, base);
      n >>= 1;
      if (n) base = mul(base, base);
    }
    return r;
  }

  Fv inv(const Fv& a) const {
    if (is_zero(a)) throw std::domain_error("inv: 0 is not invertible");
    // extended Euclid on (modulus, a); invariant r == t*a (mod modulus)
    Coeffs r = modulus, r1 = poly_trim(a);
    Coeffs t = {}, t1 = {1};
    while (poly_degree(r1) > 0) {
      const int dr = poly_degree(r), dr1 = poly_degree(r1);
      if (dr < dr1) {
        std::swap(r, r1);
        std::swap(t, t1);
        continue;
      }
      const i64 c = (r[static_cast<size_t>(dr)] * mod_inverse(r1[static_cast<size_t>(dr1)], p)) % p;
      const int shift = dr - dr1;
      auto cancel = [&](Coeffs& x, const Coeffs& y) {
        if (x.size() < y.size() + static_cast<size_t>(shift)) x.resize(y.size() + static_cast<size_t>(shift), 0);
        for (size_t j = 0; j < y.size(); ++j) x[j + static_cast<size_t>(shift)] = mod_reduce(x[j + static_cast<size_t>(shift)] - c * y[j], p);
      };
      cancel(r, r1);
      cancel(t, t1);
      r = poly_trim(std::move(r));
    }
    if (poly_degree(r1) < 0) throw std::domain_error("inv: element shares a factor with the modulus");
    const i64 unit_inv = mod_inverse(r1[0], p);
    Fv out = zero();
    for (size_t j = 0; j < t1.size(); ++j) out[j] = (t1[j] * unit_inv) % p;
    return out;
  }

  i64 index_of(const Fv& a) const {
    i64 idx = 0;
    for (int i = e - 1; i >= 0; --i) idx = idx * p + a[static_cast<size_t>(i)];
    return idx;
  }
  Fv from_index(i64 idx) const {
    Fv v = zero();
    for (int i = 0; i < e; ++i) {
      v[static_cast<size_t>(i)] = idx % p;
      idx /= p;
    }
    return v;
  }
  // Odometer step in enumeration order; false once the sweep wraps.
  bool next(Fv& v) const {
    for (int i = 0; i < e; ++i) {
      auto& d = v[static_cast<size_t>(i)];
      if (++d < p) return true;
      d = 0;
    }
    return false;
  }

  i64 abs_trace_of(const Fv& a) const {
    i64 t = 0;
    for (int i = 0; i < e; ++i) t = (t + a[static_cast<size_t>(i)] * abs_trace[static_cast<size_t>(i)]) % p;
    return t;
  }
};

inline Coeffs find_irreducible_raw(i64 p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p must be prime");
  if (e < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
  if (e == 1) return {0, 1};
  const i64 count = checked_ipow(p, e);
  for (i64 idx = 0; idx < count; ++idx) {
    Coeffs cand(static_cast<size_t>(e + 1), 0);
    i64 v = idx;
    for (int i = 0; i < e; ++i) {
      cand[static_cast<size_t>(i)] = v % p;
      v /= p;
    }
    cand[static_cast<size_t>(e)] = 1;
    // trial division by every monic polynomial of degree 1..e/2
    bool reducible = false;
    for (int d = 1; 2 * d <= e && !reducible; ++d) {
      const i64 nd = checked_ipow(p, d);
      for (i64 j = 0; j < nd && !reducible; ++j) {
        Coeffs div(static_cast<size_t>(d + 1), 0);
        i64 w = j;
        for (int i = 0; i < d; ++i) {
          div[static_cast<size_t>(i)] = w % p;
          w /= p;
        }
        div[static_cast<size_t>(d)] = 1;
        reducible = poly_degree(poly_mod(cand, div, p)) < 0;
      }
    }
    if (!reducible) return cand;
  }
  throw std::logic_error("find_irreducible: no irreducible found");  // unreachable
}

inline std::shared_ptr<const FieldData> make_field_data(i64 p, int e, Coeffs modulus, bool validate) {
  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->e = e;
  d->q = checked_ipow(p, e);
  d->modulus = std::move(modulus);
  if (validate) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: p must be prime");
    if (e < 1) throw std::invalid_argument("FieldSpec: extension degree must be >= 1");
    if (d->modulus.size() != static_cast<size_t>(e + 1) || d->modulus[static_cast<size_t>(e)] != 1)
      throw std::invalid_argument("FieldSpec: modulus must be monic of degree e");
    for (i64 c : d->modulus)
      if (c < 0 || c >= p) throw std::invalid_argument("FieldSpec: modulus coefficients must lie in [0, p)");
    if (e > 1) {
      for (int deg = 1; 2 * deg <= e; ++deg) {
        const i64 nd = checked_ipow(p, deg);
        for (i64 j = 0; j < nd; ++j) {
          Coeffs div(static_cast<size_t>(deg + 1), 0);
          i64 w = j;
          for (int i = 0; i < deg; ++i) {
            div[static_cast<size_t>(i)] = w % p;
            w /= p;
          }
          div[static_cast<size_t>(deg)] = 1;
          if (poly_degree(poly_mod(d->modulus, div, p)) < 0)
            throw std::invalid_argument("FieldSpec: modulus is reducible");
        }
      }
    }
  }
  // absolute trace of the power basis: Tr(t^i) = sum of Frobenius orbits
  d->abs_trace.assign(static_cast<size_t>(e), 0);
  for (int i = 0; i < e; ++i) {
    FieldData::Fv b = d->zero();
    b[static_cast<size_t>(i)] = 1;
    FieldData::Fv acc = b, cur = b;
    for (int j = 1; j < e; ++j) {
      cur = d->pow(cur, p);
      acc = d->add(acc, cur);
    }
    for (int j = 1; j < e; ++j)
      if (acc[static_cast<size_t>(j)] != 0) throw std::logic_error("FieldSpec: absolute trace left the prime field");
    d->abs_trace[static_cast<size_t>(i)] = acc[0];
  }
  return d;
}

}  // namespace detail

class FieldElement;

/// A concrete GF(p^e) with polynomial-basis elements.
class FieldSpec {
 public:
  FieldSpec() = default;
  FieldSpec(i64 p, int e) : d_(detail::make_field_data(p, e, detail::find_irreducible_raw(p, e), /*validate=*/false)) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: p must be prime");
  }
  FieldSpec(i64 p, int e, std::vector<i64> modulus)
      : d_(detail::make_field_data(p, e, std::move(modulus), /*validate=*/true)) {}

  bool valid() const { return static_cast<bool>(d_); }
  i64 p() const { return d_->p; }
  int e() const { return d_->e; }
  i64 q() const { return d_->q; }
  const std::vector<i64>& modulus() const { return d_->modulus; }
  const detail::FieldData& data() const { return *d_; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.p() == b.p() && a.e() == b.e() && a.modulus() == b.modulus();
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(i64 c) const;
  FieldElement from_index(i64 idx) const;
  FieldElement element(std::vector<i64> coeffs) const;

 private:
  std::shared_ptr<const detail::FieldData> d_;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldSpec owner, std::vector<i64> coeffs) : owner_(std::move(owner)), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<size_t>(owner_.e())) throw std::invalid_argument("FieldElement: wants exactly e coefficients");
    for (auto& c : c_) c = mod_reduce(c, owner_.p());
  }

  const FieldSpec& owner() const { return owner_; }
  const std::vector<i64>& coeffs() const { return c_; }
  bool is_zero() const { return owner_.data().is_zero(c_); }
  i64 index() const { return owner_.data().index_of(c_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.owner_ == b.owner_ && a.c_ == b.c_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return FieldElement(a.owner_, a.owner_.data().add(a.c_, b.c_), Raw{});
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return FieldElement(a.owner_, a.owner_.data().sub(a.c_, b.c_), Raw{});
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return FieldElement(a.owner_, a.owner_.data().mul(a.c_, b.c_), Raw{});
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inv(); }
  FieldElement operator-() const { return FieldElement(owner_, owner_.data().neg(c_), Raw{}); }

  FieldElement inv() const { return FieldElement(owner_, owner_.data().inv(c_), Raw{}); }
  FieldElement pow(i64 n) const { return FieldElement(owner_, owner_.data().pow(c_, n), Raw{}); }

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ':';
      s += std::to_string(c_[i]);
    }
    return s;
  }

 private:
  struct Raw {};
  FieldElement(FieldSpec owner, std::vector<i64> coeffs, Raw) : owner_(std::move(owner)), c_(std::move(coeffs)) {}
  void check_same(const FieldElement& o) const {
    if (owner_ != o.owner_) throw std::invalid_argument("FieldElement: operands belong to different fields");
  }
  friend class FieldSpec;
  friend class TowerContext;

  FieldSpec owner_;
  std::vector<i64> c_;
};

inline FieldElement FieldSpec::zero() const { return FieldElement(*this, d_->zero()); }
inline FieldElement FieldSpec::one() const { return FieldElement(*this, d_->one()); }
inline FieldElement FieldSpec::from_int(i64 c) const { return FieldElement(*this, d_->from_int(c)); }
inline FieldElement FieldSpec::from_index(i64 idx) const {
  if (idx < 0 || idx >= q()) throw std::invalid_argument("from_index: index out of range");
  return FieldElement(*this, d_->from_index(idx));
}
inline FieldElement FieldSpec::element(std::vector<i64> coeffs) const { return FieldElement(*this, std::move(coeffs)); }

/// Division by an integer scalar, i.e. multiplication by (m mod p)^{-1}.
inline FieldElement div_exact(const FieldElement& x, i64 m) {
  const i64 p = x.owner().p();
  if (mod_reduce(m, p) == 0)
    throw std::domain_error("div_exact: integer divisor vanishes in characteristic " + std::to_string(p));
  return x * x.owner().from_int(mod_inverse(m, p));
}

/// Monic polynomial over one field, ascending coefficients a_0..a_k, a_k = 1.
/// signed_coeff(j) returns c_j = (-1)^j a_{k-j}, so c_0 = 1 always.
class MonicPoly {
 public:
  MonicPoly(FieldSpec field, std::vector<FieldElement> ascending) : field_(std::move(field)), a_(std::move(ascending)) {
    if (a_.empty()) throw std::invalid_argument("MonicPoly: empty coefficient list");
    for (const auto& c : a_)
      if (c.owner() != field_) throw std::invalid_argument("MonicPoly: coefficient from a different field");
    if (a_.back() != field_.one()) throw std::invalid_argument("MonicPoly: leading coefficient must be 1");
  }
  static MonicPoly one(const FieldSpec& f) { return MonicPoly(f, {f.one()}); }
  static MonicPoly from_ints(const FieldSpec& f, const std::vector<i64>& a) {
    std::vector<FieldElement> v;
    v.reserve(a.size());
    for (i64 c : a) v.push_back(f.from_int(c));
    return MonicPoly(f, std::move(v));
  }

  const FieldSpec& field() const { return field_; }
  int degree() const { return static_cast<int>(a_.size()) - 1; }
  const FieldElement& coeff(int i) const { return a_[static_cast<size_t>(i)]; }
  FieldElement signed_coeff(int j) const {
    const int k = degree();
    if (j < 0 || j > k) throw std::invalid_argument("signed_coeff: index out of range");
    const FieldElement& a = a_[static_cast<size_t>(k - j)];
    return (j % 2 == 0) ? a : -a;
  }

  FieldElement eval(const FieldElement& x) const {
    FieldElement acc = field_.zero();
    for (int i = degree(); i >= 0; --i) acc = acc * x + a_[static_cast<size_t>(i)];
    return acc;
  }

  friend MonicPoly operator*(const MonicPoly& a, const MonicPoly& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("MonicPoly: operands over different fields");
    std::vector<FieldElement> r(a.a_.size() + b.a_.size() - 1, a.field_.zero());
    for (size_t i = 0; i < a.a_.size(); ++i)
      for (size_t j = 0; j < b.a_.size(); ++j) r[i + j] = r[i + j] + a.a_[i] * b.a_[j];
    return MonicPoly(a.field_, std::move(r));
  }
  friend bool operator==(const MonicPoly& a, const MonicPoly& b) { return a.field_ == b.field_ && a.a_ == b.a_; }

 private:
  FieldSpec field_;
  std::vector<FieldElement> a_;
};

/// Lexicographically smallest monic irreducible of degree e over GF(p).
inline MonicPoly find_irreducible(i64 p, int e) {
  const auto raw = detail::find_irreducible_raw(p, e);
  const FieldSpec gfp(p, 1);
  std::vector<FieldElement> v;
  v.reserve(raw.size());
  for (i64 c : raw) v.push_back(gfp.from_int(c));
  return MonicPoly(gfp, std::move(v));
}

/// F_{q^s} over F_q with an explicit embedding. The big field is the
/// canonical GF(p^{es}); base_image is the smallest root of the base
/// modulus inside it, which pins the embedding deterministically.
class TowerContext {
 public:
  TowerContext(FieldSpec base, int s) : base_(std::move(base)), s_(s) {
    if (s < 1) throw std::invalid_argument("TowerContext: s must be >= 1");
    big_ = FieldSpec(base_.p(), base_.e() * s);
    const auto& B = big_.data();
    const i64 p = base_.p();
    const int eb = base_.e();
    // smallest root of base.modulus in the big field (constant coefficients)
    detail::Coeffs cand = B.zero();
    bool found = false;
    do {
      detail::Coeffs acc = B.zero();
      for (int i = eb; i >= 0; --i) {
        acc = B.mul(acc, cand);
        acc[0] = mod_reduce(acc[0] + base_.modulus()[static_cast<size_t>(i)], p);
      }
      if (B.is_zero(acc)) {
        found = true;
        break;
      }
    } while (B.next(cand));
    if (!found) throw std::logic_error("TowerContext: base modulus has no root in the extension");
    base_image_ = FieldElement(big_, cand);
    // powers of the image, one per base basis vector
    embed_pow_.resize(static_cast<size_t>(eb));
    embed_pow_[0] = B.one();
    for (int i = 1; i < eb; ++i) embed_pow_[static_cast<size_t>(i)] = B.mul(embed_pow_[static_cast<size_t>(i - 1)], cand);
    build_pullback();
  }

  const FieldSpec& base() const { return base_; }
  const FieldSpec& big() const { return big_; }
  int s() const { return s_; }
  const FieldElement& base_image() const { return base_image_; }

  FieldElement embed(const FieldElement& c) const {
    if (c.owner() != base_) throw std::invalid_argument("embed: element is not in the base field");
    return FieldElement(big_, embed_raw(c.coeffs()));
  }

  bool in_base_image(const FieldElement& c) const {
    if (c.owner() != big_) throw std::invalid_argument("in_base_image: element is not in the extension");
    detail::Coeffs out;
    return pullback_raw(c.coeffs(), out);
  }

  FieldElement to_base(const FieldElement& c) const {
    if (c.owner() != big_) throw std::invalid_argument("to_base: element is not in the extension");
    detail::Coeffs out;
    if (!pullback_raw(c.coeffs(), out)) throw std::invalid_argument("to_base: element is not in the embedded base field");
    return FieldElement(base_, out);
  }

  detail::Coeffs embed_raw(const detail::Coeffs& c) const {
    const auto& B = big_.data();
    detail::Coeffs acc = B.zero();
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (int j = 0; j < big_.e(); ++j) {
        auto& slot = acc[static_cast<size_t>(j)];
        slot = (slot + c[i] * embed_pow_[i][static_cast<size_t>(j)]) % big_.p();
      }
    }
    return acc;
  }

  bool pullback_raw(const detail::Coeffs& y, detail::Coeffs& out) const {
    const i64 p = base_.p();
    const int rows = big_.e(), cols = base_.e();
    // v = T*y; pivot rows carry the base coordinates, all others must vanish
    std::vector<i64> v(static_cast<size_t>(rows), 0);
    for (int r = 0; r < rows; ++r) {
      i64 acc = 0;
      for (int cidx = 0; cidx < rows; ++cidx) acc = (acc + pull_t_[static_cast<size_t>(r)][static_cast<size_t>(cidx)] * y[static_cast<size_t>(cidx)]) % p;
      v[static_cast<size_t>(r)] = acc;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(rows), false);
    for (int j = 0; j < cols; ++j) is_pivot[static_cast<size_t>(pivot_row_[static_cast<size_t>(j)])] = true;
    for (int r = 0; r < rows; ++r)
      if (!is_pivot[static_cast<size_t>(r)] && v[static_cast<size_t>(r)] != 0) return false;
    out.assign(static_cast<size_t>(cols), 0);
    for (int j = 0; j < cols; ++j) out[static_cast<size_t>(j)] = v[static_cast<size_t>(pivot_row_[static_cast<size_t>(j)])];
    return true;
  }

 private:
  void build_pullback() {
    const i64 p = base_.p();
    const int rows = big_.e(), cols = base_.e();
    // row-reduce the embedding matrix, recording the transform
    std::vector<std::vector<i64>> w(static_cast<size_t>(rows), std::vector<i64>(static_cast<size_t>(cols), 0));
    for (int j = 0; j < cols; ++j)
      for (int r = 0; r < rows; ++r) w[static_cast<size_t>(r)][static_cast<size_t>(j)] = embed_pow_[static_cast<size_t>(j)][static_cast<size_t>(r)];
    pull_t_.assign(static_cast<size_t>(rows), std::vector<i64>(static_cast<size_t>(rows), 0));
    for (int r = 0; r < rows; ++r) pull_t_[static_cast<size_t>(r)][static_cast<size_t>(r)] = 1;
    pivot_row_.assign(static_cast<size_t>(cols), -1);
    int rank = 0;
    for (int j = 0; j < cols; ++j) {
      int piv = -1;
      for (int r = rank; r < rows; ++r)
        if (w[static_cast<size_t>(r)][static_cast<size_t>(j)] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::logic_error("TowerContext: embedding matrix is singular");
      std::swap(w[static_cast<size_t>(piv)], w[static_cast<size_t>(rank)]);
      std::swap(pull_t_[static_cast<size_t>(piv)], pull_t_[static_cast<size_t>(rank)]);
      const i64 s = mod_inverse(w[static_cast<size_t>(rank)][static_cast<size_t>(j)], p);
      for (auto& x : w[static_cast<size_t>(rank)]) x = (x * s) % p;
      for (auto& x : pull_t_[static_cast<size_t>(rank)]) x = (x * s) % p;
      for (int r = 0; r < rows; ++r) {
        if (r == rank) continue;
        const i64 c = w[static_cast<size_t>(r)][static_cast<size_t>(j)];
        if (c == 0) continue;
        for (int k = 0; k < cols; ++k) {
          auto& slot = w[static_cast<size_t>(r)][static_cast<size_t>(k)];
          slot = mod_reduce(slot - c * w[static_cast<size_t>(rank)][static_cast<size_t>(k)], p);
        }
        for (int k = 0; k < rows; ++k) {
          auto& slot = pull_t_[static_cast<size_t>(r)][static_cast<size_t>(k)];
          slot = mod_reduce(slot - c * pull_t_[static_cast<size_t>(rank)][static_cast<size_t>(k)], p);
        }
      }
      pivot_row_[static_cast<size_t>(j)] = rank;
      ++rank;
    }
  }

  FieldSpec base_;
  int s_ = 0;
  FieldSpec big_;
  FieldElement base_image_;
  std::vector<detail::Coeffs> embed_pow_;
  std::vector<std::vector<i64>> pull_t_;
  std::vector<int> pivot_row_;
};

inline TowerContext build_tower(const FieldSpec& base, int s) { return TowerContext(base, s); }

/// Relative trace c + c^{q^t} + ... + c^{q^{s-t}} down to the level-t
/// subfield; the result stays represented in the big field and is checked
/// to be fixed by the q^t-power Frobenius.
inline FieldElement trace_rel(const TowerContext& ctx, const FieldElement& c, int t) {
  if (c.owner() != ctx.big()) throw std::invalid_argument("trace_rel: element is not in the extension");
  if (t < 1 || ctx.s() % t != 0) throw std::invalid_argument("trace_rel: t must divide s");
  const i64 qt = checked_ipow(ctx.base().q(), t);
  FieldElement acc = c, cur = c;
  for (int i = 1; i < ctx.s() / t; ++i) {
    cur = cur.pow(qt);
    acc = acc + cur;
  }
  if (acc.pow(qt) != acc) throw std::logic_error("trace_rel: result is not Frobenius-fixed");
  return acc;
}

inline FieldElement trace_to_base(const TowerContext& ctx, const FieldElement& c) {
  return ctx.to_base(trace_rel(ctx, c, 1));
}

/// Absolute trace down to GF(p), as a residue in [0, p).
inline i64 absolute_trace(const FieldElement& c) { return c.owner().data().abs_trace_of(c.coeffs()); }

/// Norm c^{(q^s-1)/(q-1)} down to the base field, with Norm(0) = 0.
inline FieldElement norm_rel(const TowerContext& ctx, const FieldElement& c) {
  if (c.owner() != ctx.big()) throw std::invalid_argument("norm_rel: element is not in the extension");
  if (c.is_zero()) return ctx.base().zero();
  const i64 n = (ctx.big().q() - 1) / (ctx.base().q() - 1);
  return ctx.to_base(c.pow(n));
}

/// Smallest generator of F_q^* together with a full discrete-log table.
struct DlogTable {
  FieldSpec field;
  FieldElement generator;
  std::vector<i64> log;             // indexed by element index; -1 for zero
  std::vector<FieldElement> power;  // power[k] = g^k, k = 0..q-2

  i64 log_of(const FieldElement& c) const {
    if (c.owner() != field) throw std::invalid_argument("log_of: element from a different field");
    const i64 l = log[static_cast<size_t>(c.index())];
    if (l < 0) throw std::domain_error("log_of: 0 has no discrete log");
    return l;
  }
};

inline DlogTable generator_dlog(const FieldSpec& f, i64 table_bound = kTableBound) {
  const i64 q = f.q();
  if (q > table_bound) throw std::length_error("generator_dlog: field exceeds the table bound");
  const auto& D = f.data();
  const auto one = D.one();
  detail::Coeffs gen;
  for (i64 idx = 1; idx < q; ++idx) {
    const auto g = D.from_index(idx);
    auto cur = g;
    i64 ord = 1;
    while (cur != one) {
      cur = D.mul(cur, g);
      ++ord;
    }
    if (ord == q - 1) {
      gen = g;
      break;
    }
  }
  DlogTable t{f, FieldElement(f, gen), std::vector<i64>(static_cast<size_t>(q), -1), {}};
  t.power.reserve(static_cast<size_t>(q - 1));
  auto cur = one;
  for (i64 k = 0; k < q - 1; ++k) {
    t.power.push_back(FieldElement(f, cur));
    t.log[static_cast<size_t>(D.index_of(cur))] = k;
    cur = D.mul(cur, gen);
  }
  return t;
}

}  // namespace ffsum
