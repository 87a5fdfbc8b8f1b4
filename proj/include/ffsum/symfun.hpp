#pragma once

// Newton's identities in both directions, their Hessenberg-determinant
// cross-checks, and Dickson polynomials of the first kind (recurrence,
// Waring's explicit sum, root-power lifting).
//
// Everything is templated over the coefficient ring R, which needs +, -, *
// and ==. Integer multiples are built by doubling, so the forward identity
// works in positive characteristic too; the inverse direction additionally
// needs div_exact(R, i64), provided next to each concrete ring.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "ffsum/common.hpp"

namespace ffsum {

enum class SymKind { elementary, power_sum };

/// Elementary or power-sum values, 1-indexed (values[0] holds index 1).
/// Elementary entries beyond the arity are implicitly zero.
template <typename R>
struct SymCoeffs {
  SymKind kind = SymKind::elementary;
  int arity = 0;
  std::vector<R> values;
};

template <typename R>
SymCoeffs<R> elementary_coeffs(int arity, std::vector<R> v) {
  if (arity < 1) throw std::invalid_argument("elementary_coeffs: arity must be >= 1");
  return {SymKind::elementary, arity, std::move(v)};
}

template <typename R>
SymCoeffs<R> power_sum_coeffs(int arity, std::vector<R> v) {
  if (arity < 1) throw std::invalid_argument("power_sum_coeffs: arity must be >= 1");
  return {SymKind::power_sum, arity, std::move(v)};
}

/// n*x by binary doubling; needs only +,- so it survives characteristic p.
template <typename R>
R ring_scale(const R& x, const BigInt& n) {
  R zero = x - x;
  if (n == 0) return zero;
  BigInt k = n < 0 ? BigInt(-n) : n;
  R cur = n < 0 ? zero - x : x;
  R acc = zero;
  while (k > 0) {
    if ((k & 1) != 0) acc = acc + cur;
    k >>= 1;
    if (k > 0) cur = cur + cur;
  }
  return acc;
}

template <typename R>
R ring_scale(const R& x, i64 n) {
  return ring_scale(x, BigInt(n));
}

/// p_1..p_m from e_1..e_k: p_m = sum_{j<m} (-1)^{j-1} e_j p_{m-j} + (-1)^{m-1} m e_m.
template <typename R>
SymCoeffs<R> newton_p_from_e(const SymCoeffs<R>& e, int m) {
  if (e.kind != SymKind::elementary) throw std::invalid_argument("newton_p_from_e: input must be elementary");
  if (m < 1) throw std::invalid_argument("newton_p_from_e: m must be >= 1");
  if (e.values.empty()) throw std::invalid_argument("newton_p_from_e: need at least e_1");
  const R zero = e.values.front() - e.values.front();
  auto ej = [&](int j) -> R {
    if (j > e.arity || j > static_cast<int>(e.values.size())) return zero;
    return e.values[static_cast<size_t>(j - 1)];
  };
  std::vector<R> p;
  p.reserve(static_cast<size_t>(m));
  p.push_back(ej(1));
  for (int n = 2; n <= m; ++n) {
    R acc = zero;
    for (int j = 1; j <= n - 1; ++j) {
      const R term = ej(j) * p[static_cast<size_t>(n - j - 1)];
      acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    const R tail = ring_scale(ej(n), static_cast<i64>(n));
    acc = (n % 2 == 1) ? acc + tail : acc - tail;
    p.push_back(acc);
  }
  return power_sum_coeffs(e.arity, std::move(p));
}

/// e_1..e_m from p_1..p_m: m e_m = sum_{j<=m} (-1)^{j-1} e_{m-j} p_j, e_0 = 1.
template <typename R>
SymCoeffs<R> newton_e_from_p(const SymCoeffs<R>& p) {
  if (p.kind != SymKind::power_sum) throw std::invalid_argument("newton_e_from_p: input must be power sums");
  if (p.values.empty()) throw std::invalid_argument("newton_e_from_p: need at least p_1");
  const R zero = p.values.front() - p.values.front();
  std::vector<R> e;
  e.reserve(p.values.size());
  for (int m = 1; m <= static_cast<int>(p.values.size()); ++m) {
    R acc = zero;
    for (int j = 1; j <= m - 1; ++j) {
      const R term = e[static_cast<size_t>(m - j - 1)] * p.values[static_cast<size_t>(j - 1)];
      acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    // j = m contributes (-1)^{m-1} e_0 p_m
    acc = (m % 2 == 1) ? acc + p.values[static_cast<size_t>(m - 1)] : acc - p.values[static_cast<size_t>(m - 1)];
    e.push_back(div_exact(acc, static_cast<i64>(m)));
  }
  return elementary_coeffs(p.arity, std::move(e));
}

namespace detail {

// Determinant by cofactor expansion along the leading column. Fine for the
// m <= 8 Hessenberg cross-checks this backs.
template <typename R>
R det_expand(const std::vector<std::vector<R>>& m, std::vector<int> rows, size_t col, const R& zero) {
  if (rows.size() == 1) return m[static_cast<size_t>(rows[0])][col];
  R acc = zero;
  for (size_t i = 0; i < rows.size(); ++i) {
    const R& entry = m[static_cast<size_t>(rows[i])][col];
    if (entry == zero) continue;
    std::vector<int> sub;
    sub.reserve(rows.size() - 1);
    for (size_t j = 0; j < rows.size(); ++j)
      if (j != i) sub.push_back(rows[j]);
    const R term = entry * det_expand(m, std::move(sub), col + 1, zero);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace detail

/// Converts between elementary and power-sum coordinates through the
/// explicit Hessenberg determinants instead of the iterative recurrences;
/// by contract the two routes agree.
template <typename R>
SymCoeffs<R> det_cross_check(const SymCoeffs<R>& in, const R& one) {
  const int m = static_cast<int>(in.values.size());
  if (m < 1) throw std::invalid_argument("det_cross_check: empty input");
  if (m > 8) throw std::invalid_argument("det_cross_check: determinant route is limited to m <= 8");
  const R zero = one - one;
  auto val = [&](int idx) -> R {
    if (idx == 0) return one;
    if (idx < 0 || idx > static_cast<int>(in.values.size())) return zero;
    if (in.kind == SymKind::elementary && idx > in.arity) return zero;
    return in.values[static_cast<size_t>(idx - 1)];
  };
  std::vector<R> out;
  out.reserve(static_cast<size_t>(m));
  for (int n = 1; n <= m; ++n) {
    std::vector<std::vector<R>> mat(static_cast<size_t>(n), std::vector<R>(static_cast<size_t>(n), zero));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        R& slot = mat[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
        if (in.kind == SymKind::elementary) {
          // p_n as a determinant in the e's
          if (j == 1)
            slot = ring_scale(val(i), static_cast<i64>(i));
          else if (j <= i + 1)
            slot = val(i - j + 1);
        } else {
          // n! e_n as a determinant in the p's
          if (j == i + 1)
            slot = ring_scale(one, static_cast<i64>(i));
          else if (j <= i)
            slot = val(i - j + 1);
        }
      }
    }
    std::vector<int> rows(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = i;
    R d = detail::det_expand(mat, std::move(rows), 0, zero);
    if (in.kind == SymKind::power_sum)
      for (int k = 2; k <= n; ++k) d = div_exact(d, static_cast<i64>(k));
    out.push_back(std::move(d));
  }
  return in.kind == SymKind::elementary ? power_sum_coeffs(in.arity, std::move(out))
                                        : elementary_coeffs(in.arity, std::move(out));
}

/// x_1..x_k and the product parameter a of the degree-(k+1) characteristic
/// polynomial x^{k+1} - x_1 x^k + ... + (-1)^k x_k x + (-1)^{k+1} a.
template <typename R>
struct DicksonInput {
  std::vector<R> x;
  R a;
  int arity() const { return static_cast<int>(x.size()); }
};

/// D_n^{(1)} by the order-(k+1) linear recurrence with its k+1 initial
/// values; D_0^{(1)} = k+1.
template <typename R>
R dickson_d1_recurrence(const DicksonInput<R>& in, i64 n, const R& one) {
  const int k = in.arity();
  if (k < 1) throw std::invalid_argument("dickson_d1_recurrence: arity must be >= 1");
  if (n < 0) throw std::invalid_argument("dickson_d1_recurrence: n must be >= 0");
  const R zero = one - one;
  std::vector<R> d;
  d.reserve(static_cast<size_t>(std::max<i64>(n + 1, k + 1)));
  d.push_back(ring_scale(one, static_cast<i64>(k + 1)));
  for (int j = 1; j <= k && j <= n; ++j) {
    R acc = zero;
    for (int t = 1; t <= j; ++t) {
      const R term = in.x[static_cast<size_t>(t - 1)] * d[static_cast<size_t>(j - t)];
      acc = (t % 2 == 1) ? acc + term : acc - term;
    }
    const R tail = ring_scale(in.x[static_cast<size_t>(j - 1)], static_cast<i64>(k + 1 - j));
    acc = (j % 2 == 0) ? acc + tail : acc - tail;
    d.push_back(acc);
  }
  for (i64 m = k + 1; m <= n; ++m) {
    R acc = zero;
    for (int t = 1; t <= k; ++t) {
      const R term = in.x[static_cast<size_t>(t - 1)] * d[static_cast<size_t>(m - t)];
      acc = (t % 2 == 1) ? acc + term : acc - term;
    }
    const R aterm = in.a * d[static_cast<size_t>(m - k - 1)];
    acc = (k % 2 == 0) ? acc + aterm : acc - aterm;
    d.push_back(acc);
  }
  return d[static_cast<size_t>(n)];
}

/// D_n^{(1)} by Waring's explicit sum over multi-indices (m_1..m_{k+1}) with
/// sum j*m_j = n. The integer prefactor n (T-1)! / prod m_j! is computed in
/// characteristic zero and only then pushed into the ring.
template <typename R>
R dickson_d1_waring(const DicksonInput<R>& in, i64 n, const R& one) {
  const int k = in.arity();
  if (k < 1) throw std::invalid_argument("dickson_d1_waring: arity must be >= 1");
  if (n < 1) throw std::invalid_argument("dickson_d1_waring: n must be >= 1");
  const R zero = one - one;
  R acc = zero;
  std::vector<i64> m(static_cast<size_t>(k + 1), 0);
  auto emit = [&]() {
    i64 total = 0;
    for (i64 v : m) total += v;
    BigInt numer = BigInt(n) * factorial(total - 1);
    BigInt denom = 1;
    for (i64 v : m) denom *= factorial(v);
    if (numer % denom != 0) throw std::logic_error("dickson_d1_waring: non-integral prefactor");
    BigInt coeff = numer / denom;
    if ((n - total) % 2 != 0) coeff = -coeff;
    R mono = one;
    for (int j = 0; j < k; ++j)
      for (i64 t = 0; t < m[static_cast<size_t>(j)]; ++t) mono = mono * in.x[static_cast<size_t>(j)];
    for (i64 t = 0; t < m[static_cast<size_t>(k)]; ++t) mono = mono * in.a;
    acc = acc + ring_scale(mono, coeff);
  };
  // enumerate m_j >= 0 with sum j*m_j = n
  auto rec = [&](auto&& self, int j, i64 remaining) -> void {
    if (j == k + 1) {
      // last slot has weight k+1
      if (remaining % (k + 1) == 0) {
        m[static_cast<size_t>(k)] = remaining / (k + 1);
        emit();
        m[static_cast<size_t>(k)] = 0;
      }
      return;
    }
    for (i64 v = 0; v * j <= remaining; ++v) {
      m[static_cast<size_t>(j - 1)] = v;
      self(self, j + 1, remaining - v * j);
    }
    m[static_cast<size_t>(j - 1)] = 0;
  };
  rec(rec, 1, n);
  return acc;
}

namespace detail {

inline Rational rational_determinant(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = Rational(1) / m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Res_y(f, g) via the Sylvester matrix, both ascending.
inline Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  const int df = static_cast<int>(f.size()) - 1;
  const int dg = static_cast<int>(g.size()) - 1;
  const size_t n = static_cast<size_t>(df + dg);
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
  for (int r = 0; r < dg; ++r)
    for (int j = 0; j <= df; ++j) s[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = f[static_cast<size_t>(df - j)];
  for (int r = 0; r < df; ++r)
    for (int j = 0; j <= dg; ++j) s[static_cast<size_t>(dg + r)][static_cast<size_t>(r + j)] = g[static_cast<size_t>(dg - j)];
  return rational_determinant(std::move(s));
}

inline std::vector<Rational> lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const size_t n = xs.size();
  std::vector<Rational> out(n);
  for (size_t i = 0; i < n; ++i) {
    // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<Rational> basis = {1};
    Rational denom = 1;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= xs[j] * basis[t];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    const Rational scale = ys[i] / denom;
    for (size_t t = 0; t < basis.size(); ++t) out[t] += scale * basis[t];
  }
  return out;
}

}  // namespace detail

/// Given monic r of degree k+1 with rational coefficients (ascending),
/// returns r_n(x) = prod (x - beta_i^n) over the roots beta_i of r, exactly,
/// by evaluation-interpolation of Res_y(r(y), x - y^n) at k+2 integer
/// points. The signed coefficients of the result are the Dickson values
/// D_n^{(i)} of r's coefficient data.
inline std::vector<Rational> lift_roots_power(const std::vector<Rational>& r, i64 n) {
  if (n < 1) throw std::invalid_argument("lift_roots_power: n must be >= 1");
  const int deg = static_cast<int>(r.size()) - 1;
  if (deg < 1 || r.back() != 1) throw std::invalid_argument("lift_roots_power: polynomial must be monic of degree >= 1");
  if (deg > 6) throw std::invalid_argument("lift_roots_power: degree bound 6 exceeded");
  std::vector<Rational> xs, ys;
  xs.reserve(static_cast<size_t>(deg + 1));
  ys.reserve(static_cast<size_t>(deg + 1));
  for (int j = 0; j <= deg; ++j) {
    std::vector<Rational> g(static_cast<size_t>(n + 1));
    g[0] = Rational(j);
    g[static_cast<size_t>(n)] = -1;
    xs.emplace_back(j);
    ys.push_back(detail::resultant(r, g));
  }
  auto out = detail::lagrange_interpolate(xs, ys);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  if (static_cast<int>(out.size()) - 1 != deg || out.back() != 1)
    throw std::logic_error("lift_roots_power: interpolated polynomial is not monic of the right degree");
  return out;
}

/// Reads D_n^{(i)}, i = 1..deg, off the signed coefficients of r_n.
inline std::vector<Rational> dickson_values_from_lift(const std::vector<Rational>& rn) {
  const int deg = static_cast<int>(rn.size()) - 1;
  std::vector<Rational> d;
  d.reserve(static_cast<size_t>(deg));
  for (int i = 1; i <= deg; ++i) {
    Rational v = rn[static_cast<size_t>(deg - i)];
    if (i % 2 == 1) v = -v;
    d.push_back(std::move(v));
  }
  return d;
}

/// Sparse multivariate polynomial over Q; just enough ring structure for
/// symbolic Dickson identities and the CLI's printed form.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars) : n_(nvars) {
    if (nvars < 1) throw std::invalid_argument("MultiPoly: need at least one variable");
  }
  static MultiPoly constant(int nvars, Rational c) {
    MultiPoly r(nvars);
    r.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), std::move(c));
    return r;
  }
  static MultiPoly variable(int nvars, int idx) {
    if (idx < 0 || idx >= nvars) throw std::invalid_argument("MultiPoly: variable index out of range");
    MultiPoly r(nvars);
    std::vector<int> key(static_cast<size_t>(nvars), 0);
    key[static_cast<size_t>(idx)] = 1;
    r.add_term(std::move(key), 1);
    return r;
  }

  int nvars() const { return n_; }
  const std::map<std::vector<int>, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    a.check(b);
    for (const auto& [k, c] : b.t_) a.add_term(k, c);
    return a;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    a.check(b);
    for (const auto& [k, c] : b.t_) a.add_term(k, -c);
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly r(a.n_);
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_) {
        std::vector<int> k(ka);
        for (size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
        r.add_term(std::move(k), ca * cb);
      }
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r(n_);
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  void check(const MultiPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("MultiPoly: mismatched variable counts");
  }
  void add_term(std::vector<int> key, Rational c) {
    auto it = t_.find(key);
    if (it == t_.end()) {
      if (c != 0) t_.emplace(std::move(key), std::move(c));
      return;
    }
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }

  int n_;
  std::map<std::vector<int>, Rational> t_;
};

/// Symbolic Dickson input in variables x_1..x_k plus the parameter a.
inline DicksonInput<MultiPoly> dickson_symbolic_input(int k) {
  std::vector<MultiPoly> x;
  x.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) x.push_back(MultiPoly::variable(k + 1, i));
  return {std::move(x), MultiPoly::variable(k + 1, k)};
}

/// Text form of a Dickson polynomial: "x^5 - 5a x^3 + 5a^2 x" style, with
/// variables x (k = 1) or x1..xk, the parameter a printed with the number.
inline std::string format_dickson(const MultiPoly& poly, int k) {
  if (poly.nvars() != k + 1) throw std::invalid_argument("format_dickson: variable count does not match k");
  if (poly.is_zero()) return "0";
  std::string out;
  // descending on the x-exponents
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    const auto& key = it->first;
    const Rational& c = it->second;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const int apow = key[static_cast<size_t>(k)];
    bool has_x = false;
    for (int i = 0; i < k; ++i)
      if (key[static_cast<size_t>(i)] != 0) has_x = true;
    std::string numpart;
    if (mag != 1 || (apow == 0 && !has_x)) {
      numpart = numerator(mag).str();
      if (denominator(mag) != 1) numpart += "/" + denominator(mag).str();
    }
    if (apow >= 1) {
      numpart += "a";
      if (apow > 1) numpart += "^" + std::to_string(apow);
    }
    std::string xpart;
    for (int i = 0; i < k; ++i) {
      const int pw = key[static_cast<size_t>(i)];
      if (pw == 0) continue;
      if (!xpart.empty()) xpart += " ";
      xpart += (k == 1) ? "x" : "x" + std::to_string(i + 1);
      if (pw > 1) xpart += "^" + std::to_string(pw);
    }
    out += numpart;
    if (!numpart.empty() && !xpart.empty()) out += " ";
    out += xpart;
  }
  return out;
}

}  // namespace ffsum
