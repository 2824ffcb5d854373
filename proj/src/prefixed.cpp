#include "unimodal/prefixed.hpp"

#include <algorithm>

namespace unimodal {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

bool is_zero_body(const Series<ZetaLaurent>& s) { return s.is_zero(); }

// body * zeta^dz * q^dq (dq >= 0), truncated to `order`.
Series<ZetaLaurent> shifted_body(const Series<ZetaLaurent>& b, int dz, int dq, int order) {
  Series<ZetaLaurent> r(order);
  for (int n = 0; n + dq <= order && n <= b.order(); ++n)
    if (!b[n].is_zero()) r[n + dq] = dz == 0 ? b[n] : b[n].shifted(dz);
  return r;
}

}  // namespace

PrefixedSeries::PrefixedSeries(Series<ZetaLaurent> b, int zeta_half_, int q24_, int tag, ZetaLaurent d)
    : zeta_half(zeta_half_), q24(q24_), unit_tag(mod(tag, 4)), body(std::move(b)), den(std::move(d)) {
  if (den.is_zero()) throw Error(ErrorKind::not_invertible, "zero denominator in PrefixedSeries");
}

PrefixedSeries PrefixedSeries::normalized() const {
  const int v = body.valuation();
  if (v == 0 || v > body.order()) return *this;
  PrefixedSeries r = *this;
  r.q24 += 24 * v;
  r.body = Series<ZetaLaurent>(std::vector<ZetaLaurent>(body.coeffs().begin() + v, body.coeffs().end()),
                               body.order() - v);
  return r;
}

PrefixedSeries& PrefixedSeries::operator*=(const PrefixedSeries& o) {
  const PrefixedSeries a = normalized();
  const PrefixedSeries b = o.normalized();
  int order = std::min(a.body.order(), b.body.order());
  // A zero factor is known through its own precision only.
  if (is_zero_body(a.body)) order = a.body.order();
  if (is_zero_body(b.body)) order = b.body.order();
  zeta_half = a.zeta_half + b.zeta_half;
  q24 = a.q24 + b.q24;
  unit_tag = mod(a.unit_tag + b.unit_tag, 4);
  body = mul_truncated(a.body, b.body, order);
  den = a.den.is_one() ? b.den : (b.den.is_one() ? a.den : a.den * b.den);
  return *this;
}

PrefixedSeries& PrefixedSeries::operator*=(const ZetaLaurent& c) {
  body *= c;
  return *this;
}

PrefixedSeries operator-(PrefixedSeries a) {
  a.unit_tag = mod(a.unit_tag + 2, 4);
  return a;
}

PrefixedSeries operator+(const PrefixedSeries& a, const PrefixedSeries& b) {
  if (mod(a.zeta_half - b.zeta_half, 2) != 0 || mod(a.q24 - b.q24, 24) != 0 ||
      mod(a.unit_tag - b.unit_tag, 2) != 0)
    throw Error(ErrorKind::lattice_mismatch,
                "prefixes (" + std::to_string(a.zeta_half) + "/2, " + std::to_string(a.q24) + "/24, i^" +
                    std::to_string(a.unit_tag) + ") and (" + std::to_string(b.zeta_half) + "/2, " +
                    std::to_string(b.q24) + "/24, i^" + std::to_string(b.unit_tag) + ") are not commensurable");
  PrefixedSeries r;
  r.zeta_half = std::min(a.zeta_half, b.zeta_half);
  r.q24 = std::min(a.q24, b.q24);
  r.unit_tag = a.unit_tag;
  const int prec = std::min(a.precision24(), b.precision24());
  const int order = (prec - r.q24) / 24;
  if (order < 0) throw Error(ErrorKind::order_mismatch, "sum has no known coefficients");
  auto aligned = [&](const PrefixedSeries& x) {
    Series<ZetaLaurent> s = shifted_body(x.body, (x.zeta_half - r.zeta_half) / 2, (x.q24 - r.q24) / 24, order);
    if (x.unit_tag != r.unit_tag) s = -s;
    return s;
  };
  Series<ZetaLaurent> sa = aligned(a), sb = aligned(b);
  if (a.den == b.den) {
    r.den = a.den;
  } else {
    sa *= b.den;
    sb *= a.den;
    r.den = a.den * b.den;
  }
  r.body = sa + sb;
  return r;
}

PrefixedSeries PrefixedSeries::inverse() const {
  const PrefixedSeries a = normalized();
  if (is_zero_body(a.body)) throw Error(ErrorKind::not_invertible, "inverse of a series with no known non-zero term");
  const int m = a.body.order();
  const ZetaLaurent& lead = a.body[0];
  PrefixedSeries r;
  r.zeta_half = -a.zeta_half;
  r.q24 = -a.q24;
  r.unit_tag = mod(-a.unit_tag, 4);
  if (lead.is_unit()) {
    r.body = invert(a.body) * a.den;
    r.den = 1;
    return r;
  }
  // 1/(L + T) = sum_n H_n q^n / L^{n+1}, H_0 = 1, H_n = -sum_{j>=1} T_j L^{j-1} H_{n-j}.
  std::vector<ZetaLaurent> lpow(m + 2, 1);
  for (int k = 1; k <= m + 1; ++k) lpow[k] = lpow[k - 1] * lead;
  std::vector<ZetaLaurent> h(m + 1);
  h[0] = 1;
  for (int n = 1; n <= m; ++n) {
    ZetaLaurent acc;
    for (int j = 1; j <= n; ++j)
      if (!a.body[j].is_zero() && !h[n - j].is_zero()) acc.add_product(a.body[j] * lpow[j - 1], h[n - j]);
    h[n] = -acc;
  }
  Series<ZetaLaurent> b(m);
  for (int n = 0; n <= m; ++n) b[n] = h[n] * lpow[m - n];
  r.body = b * a.den;
  r.den = lpow[m + 1];
  BigInt g = r.den.content();
  for (int n = 0; n <= m && g != 1; ++n) {
    BigInt c = r.body[n].content();
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g > 1) {
    for (int n = 0; n <= m; ++n) r.body[n] = *exact_divide(r.body[n], ZetaLaurent(g));
    r.den = *exact_divide(r.den, ZetaLaurent(g));
  }
  return r;
}

PrefixedSeries PrefixedSeries::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  PrefixedSeries r = PrefixedSeries::one(order());
  PrefixedSeries base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return r;
}

Laurent<ZetaLaurent> PrefixedSeries::to_laurent() const {
  if (mod(zeta_half, 2) != 0 || mod(q24, 24) != 0 || unit_tag % 2 != 0)
    throw Error(ErrorKind::lattice_mismatch,
                "prefix zeta^(" + std::to_string(zeta_half) + "/2) q^(" + std::to_string(q24) + "/24) i^" +
                    std::to_string(unit_tag) + " is not integral");
  Laurent<ZetaLaurent> r{q24 / 24, Series<ZetaLaurent>(body.order())};
  const bool unit_den = den.is_unit();
  const ZetaLaurent dinv = unit_den ? unit_inverse(den) : ZetaLaurent(1);
  for (int n = 0; n <= body.order(); ++n) {
    if (body[n].is_zero()) continue;
    ZetaLaurent c = body[n].shifted(zeta_half / 2);
    if (unit_den) {
      c *= dinv;
    } else {
      auto qd = exact_divide(c, den);
      if (!qd)
        throw Error(ErrorKind::uncleared_denominator,
                    "coefficient of q^" + std::to_string(n + r.valuation) + " not divisible by " + den.to_string());
      c = std::move(*qd);
    }
    r.body[n] = unit_tag == 2 ? -c : c;
  }
  return r;
}

Series<ZetaLaurent> PrefixedSeries::to_integral() const {
  const Laurent<ZetaLaurent> l = to_laurent();
  if (l.precision() < 0) throw Error(ErrorKind::order_mismatch, "no non-negative q-powers are known");
  return l.to_series(l.precision());
}

std::optional<PrefixedMismatch> prefixed_equal(const PrefixedSeries& a, const PrefixedSeries& b) {
  const PrefixedSeries d = a - b;
  for (int n = 0; n <= d.body.order(); ++n) {
    if (d.body[n].is_zero()) continue;
    return PrefixedMismatch{d.zeta_half + 2 * d.body[n].min_exponent(), d.q24 + 24 * n};
  }
  return std::nullopt;
}

PrefixedSeries prefixed_mul(const PrefixedSeries& a, const PrefixedSeries& b) { return a * b; }

}  // namespace unimodal
