#include "unimodal/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "unimodal/gf.hpp"

namespace unimodal {

namespace {

constexpr double kPi = std::numbers::pi;

using QB = QProduct<BigInt>;

Series<BigInt> expand_integral(const QB& f, int n) { return f.expand(n).to_series(n); }

}  // namespace

GrowthTarget parse_growth_target(std::string_view name) {
  if (name == "p") return GrowthTarget::p;
  if (name == "u") return GrowthTarget::u;
  if (name == "u2bar") return GrowthTarget::u2bar;
  if (name == "u2") return GrowthTarget::u2;
  throw Error(ErrorKind::domain, "unknown growth target '" + std::string(name) + "' (p, u, u2bar, u2)");
}

std::string to_string(GrowthTarget t) {
  switch (t) {
    case GrowthTarget::p: return "p";
    case GrowthTarget::u: return "u";
    case GrowthTarget::u2bar: return "u2bar";
    case GrowthTarget::u2: return "u2";
  }
  return "?";
}

Series<BigInt> exact_counts(GrowthTarget t, int n) {
  if (n < 0) throw Error(ErrorKind::domain, "negative order");
  if (n > kCountGuard)
    throw Error(ErrorKind::size_limit, "exact counts are capped at n = " + std::to_string(kCountGuard));
  const BigInt one = 1;
  switch (t) {
    case GrowthTarget::p: return build_P<BigInt>(n);
    case GrowthTarget::u: return build_U<BigInt>(one, n);
    case GrowthTarget::u2bar: return negate_q(build_Ubar2<BigInt>(one, n));
    case GrowthTarget::u2: return negate_q(build_U2<BigInt>(one, n));
  }
  throw Error(ErrorKind::domain, "bad target");
}

double growth_exponent(GrowthTarget t, int n) {
  return t == GrowthTarget::u2bar ? kPi * std::sqrt(n / 2.0) : kPi * std::sqrt(2.0 * n / 3.0);
}

double log_main_term(GrowthTarget t, int n) {
  if (n < 1) throw Error(ErrorKind::domain, "main term needs n >= 1");
  const double e = growth_exponent(t, n);
  switch (t) {
    case GrowthTarget::p: return e - std::log(4 * std::sqrt(3.0) * n);
    case GrowthTarget::u: return e - std::log(8.0) - 0.25 * std::log(6.0) - 0.75 * std::log(n);
    case GrowthTarget::u2bar: return e - std::log(8.0) - 0.75 * std::log(2.0 * n);
    case GrowthTarget::u2: return e - std::log(4 * std::sqrt(3.0)) - 0.75 * std::log(6.0 * n);
  }
  return 0;
}

double log_big(const BigInt& x) {
  if (x <= 0) throw Error(ErrorKind::domain, "log of a non-positive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
}

RatioReport ratio_report(GrowthTarget t, const std::vector<int>& checkpoints, const Series<BigInt>& counts) {
  RatioReport r;
  r.target = t;
  for (int n : checkpoints) {
    if (n < 1 || n > counts.order())
      throw Error(ErrorKind::out_of_range, "checkpoint " + std::to_string(n) + " outside the computed range");
    RatioRow row;
    row.n = n;
    row.log_count = log_big(counts[n]);
    row.log_main = log_main_term(t, n);
    row.ratio = std::exp(row.log_count - row.log_main);
    row.deviation = std::abs(row.ratio - 1);
    row.log_ratio = row.log_count / growth_exponent(t, n);
    r.rows.push_back(row);
  }
  r.deviation_decreasing = !r.rows.empty();
  for (std::size_t i = 1; i < r.rows.size(); ++i)
    if (!(r.rows[i].deviation < r.rows[i - 1].deviation)) r.deviation_decreasing = false;
  if (!r.rows.empty()) {
    const RatioRow& last = r.rows.back();
    r.log_ratio_within_2pct = std::abs(last.log_ratio - 1) <= 0.02;
    r.log_main_within_2pct = std::abs(last.log_count / last.log_main - 1) <= 0.02;
  }
  return r;
}

RatioReport ratio_report(GrowthTarget t, const std::vector<int>& checkpoints) {
  int top = 1;
  for (int n : checkpoints) top = std::max(top, n);
  return ratio_report(t, checkpoints, exact_counts(t, top));
}

std::optional<int> first_decrease(const Series<BigInt>& counts) {
  for (int n = 0; n < counts.order(); ++n)
    if (counts[n + 1] < counts[n]) return n;
  return std::nullopt;
}

std::optional<int> monotonicity_check(GrowthTarget t, int n) { return first_decrease(exact_counts(t, n)); }

std::optional<int> first_negative(const Series<BigInt>& s) {
  for (int n = 0; n <= s.order(); ++n)
    if (s[n] < 0) return n;
  return std::nullopt;
}

Series<BigInt> one_minus_q_ubar2(int n) {
  Series<BigInt> f = exact_counts(GrowthTarget::u2bar, n);
  for (int k = n; k >= 1; --k) f[k] -= f[k - 1];
  return f;
}

Series<BigInt> f_term(int k, int n) {
  if (k < 1) throw Error(ErrorKind::domain, "F_k needs k >= 1");
  QB f(1, 2 * k);
  f.times(-1, 2, 2, k - 1).over(-1, 2 * k, 1, 1).over(1, 3, 2, k - 1);
  return expand_integral(f, n);
}

Series<BigInt> f_group(int n) {
  Series<BigInt> s(n);
  for (int k = 1; k <= 4; ++k) s += f_term(k, n);
  return s;
}

std::pair<Series<BigInt>, Series<BigInt>> f_group_closed_forms(int n) {
  auto poly = [n](std::initializer_list<std::pair<int, int>> terms) {
    Series<BigInt> p(n);
    for (auto [c, e] : terms)
      if (e <= n) p[e] += c;
    return p;
  };
  auto times = [n](const Series<BigInt>& a, const QB& f) { return mul_truncated(a, expand_integral(f, n), n); };
  QB d13a, d13b, d24a, d24b;
  d13a.over(1, 12, 1, 1);
  d13b.over(1, 5, 1, 1).over(1, 12, 1, 1);
  Series<BigInt> f13 = times(poly({{1, 2}, {1, 6}, {1, 11}}), d13a) +
                       times(poly({{1, 6}, {1, 9}, {2, 10}, {2, 13}, {1, 17}, {1, 21}}), d13b) - poly({{1, 4}});
  d24a.times(-1, 2, 1, 1).over(1, 3, 1, 1).over(-1, 4, 1, 1);
  d24b.times(-1, 2, 1, 1).times(-1, 4, 1, 1).times(-1, 6, 1, 1);
  d24b.over(1, 3, 1, 1).over(1, 5, 1, 1).over(1, 7, 1, 1).over(-1, 8, 1, 1);
  Series<BigInt> f24 = times(poly({{1, 4}}), d24a) + times(poly({{1, 8}}), d24b);
  return {f13, f24};
}

std::vector<EtaProbeRow> eta_asymptotic_probe(const std::vector<double>& ws) {
  std::vector<EtaProbeRow> out;
  for (double w : ws) {
    if (!(w > 0)) throw Error(ErrorKind::domain, "probe needs w > 0");
    EtaProbeRow row;
    row.w = w;
    // Once e^{-kw} < 1e-18 the remaining factors change the log by less than
    // e^{-kw} / (1 - e^{-w}) in absolute value.
    double s = 0;
    int k = 1;
    for (;; ++k) {
      const double x = std::exp(-k * w);
      s += std::log1p(-x);
      if (x / (-std::expm1(-w)) < 1e-18) break;
    }
    row.factors = k;
    row.log_product = s;
    row.log_asymptotic = 0.5 * std::log(2 * kPi / w) - kPi * kPi / (6 * w);
    row.ratio = std::exp(row.log_product - row.log_asymptotic);
    out.push_back(row);
  }
  return out;
}

std::pair<double, double> limit_sums(double w) {
  if (!(w > 0)) throw Error(ErrorKind::domain, "limit sums need w > 0");
  const double q = std::exp(-w);
  double first = 0, second = 0;
  double num1 = 1, num2 = 1, den = 1 + q, sign = 1, qn = 1, q2n = 1;
  for (int n = 0; n < 1000000; ++n) {
    const double t1 = sign * num1 * qn / den, t2 = sign * num2 * q2n / (den * den);
    first += t1;
    second += t2;
    if (std::abs(t1) < 1e-17 && std::abs(t2) < 1e-17 && n > 10) break;
    num1 *= 1 - std::pow(q, 2 * n + 2);
    num2 *= 1 - std::pow(q, 4 * n + 2);
    den *= 1 + std::pow(q, 2 * n + 3);
    sign = -sign;
    qn *= q;
    q2n *= q * q;
  }
  return {first, second};
}

}  // namespace unimodal
