#include "unimodal/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "unimodal/bailey.hpp"
#include "unimodal/classical.hpp"
#include "unimodal/gf.hpp"
#include "unimodal/laurent_ops.hpp"
#include "unimodal/modular.hpp"
#include "unimodal/parity.hpp"

namespace unimodal {

namespace {

using ZL = ZetaLaurent;
using L = Laurent<ZL>;
using ZM = Monomial<ZL>;
using QM = Monomial<Rational>;

const ZL z = ZL::monomial(1);
const ZL zi = ZL::monomial(-1);
const ZL one = 1;

// Extra q-powers computed past the comparison order; prefixed products lose
// a few coefficients to their fractional offsets.
constexpr int kMargin = 12;

L lift(const Series<ZL>& s) { return {0, s}; }

ZM zm(const ZL& c, int e) { return {c, e}; }

PrefixedSeries prefixed(const L& l) { return PrefixedSeries(l.body, 0, 24 * l.valuation); }

PrefixedSeries prefixed(const QProduct<ZL>& f, int w) { return prefixed(f.expand(w)); }

PrefixedSeries unit_prefix(int w, int zeta_half, int q24, int tag, const ZL& c = one) {
  return PrefixedSeries(Series<ZL>::constant(c, w), zeta_half, q24, tag);
}

PrefixedSeries constant_prefixed(const ZL& c, int w) { return PrefixedSeries(Series<ZL>::constant(c, w)); }

// Multiplies every term by the product of their distinct non-unit
// denominators, so each term reduces to an integral Laurent series. Returns
// that product through `extra` and the sum through q^top.
L clear_and_sum(const std::vector<PrefixedSeries>& terms, int top, ZL& extra) {
  std::vector<ZL> dens;
  for (const auto& t : terms)
    if (!t.den.is_unit() && std::find(dens.begin(), dens.end(), t.den) == dens.end()) dens.push_back(t.den);
  extra = one;
  for (const auto& d : dens) extra *= d;
  LaurentAccumulator<ZL> acc(top);
  for (const auto& t : terms) acc.add(through((t * extra).to_laurent(), top));
  return acc.result();
}

L scaled(const L& a, const ZL& c) { return a * c; }

L from_integers(const Series<BigInt>& s) {
  Series<ZL> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r[n] = ZL(s[n]);
  return lift(r);
}

// Two rational sides as one integral pair, scaled by their common denominator.
SidePair rational_pair(std::string label, const Sides<Rational>& s, int top) {
  const Laurent<Rational> a = through(s.lhs, top), b = through(s.rhs, top);
  const BigInt d = lcm(denominator_lcm(a), denominator_lcm(b));
  auto convert = [&](const Laurent<Rational>& x) {
    Series<ZL> r(x.body.order());
    for (int k = 0; k <= x.body.order(); ++k) {
      const Rational v = x.body[k] * Rational(d);
      r[k] = ZL(BigInt(v.get_num()));
    }
    return L{x.valuation, r};
  };
  return {std::move(label), convert(a), convert(b)};
}

SidePair zeta_pair(std::string label, const Sides<ZL>& s, int top) {
  return {std::move(label), through(s.lhs, top), through(s.rhs, top)};
}

std::string describe(const QM& m) {
  std::string c = m.coeff.get_str();
  return m.q_exp == 0 ? c : c + "q^" + std::to_string(m.q_exp);
}

std::string describe(const ClassicalSpec& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.params.size(); ++i) out += (i ? ", " : "") + describe(s.params[i]);
  out += ")";
  if (s.step != 1) out += " base q^" + std::to_string(s.step);
  return out;
}

Sides<Rational> classical_sides(std::string_view key, const ClassicalSpec& s, int top) {
  const auto& p = s.params;
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      throw Error(ErrorKind::domain, std::string(key) + " takes " + std::to_string(k) + " parameters, got " +
                                         std::to_string(p.size()));
  };
  if (key == "heine") {
    need(4);
    return heine_sides<Rational>({p[0], p[1], p[2], p[3], s.step}, top);
  }
  if (key == "watson") {
    if (p.size() == 4) return watson_sides<Rational>({p[0], p[1], std::nullopt, p[2], p[3], s.step}, top);
    need(5);
    return watson_sides<Rational>({p[0], p[1], p[2], p[3], p[4], s.step}, top);
  }
  if (key == "ab621") {
    need(4);
    return partial_theta_sides<Rational>({p[0], p[1], p[2], p[3], s.step}, top);
  }
  if (key == "ab6312") {
    need(3);
    return companion_sides<Rational>({p[0], p[1], p[2], s.step}, top);
  }
  throw Error(ErrorKind::unknown_identity, "no rational specializations for '" + std::string(key) + "'");
}

QM qm(Rational c, int e) { return {std::move(c), e}; }

// Rational pairs for a classical lemma; skipped specializations go to notes.
std::vector<SidePair> classical_pairs(std::string_view key, const std::vector<ClassicalSpec>& specs, int top,
                                      std::vector<std::string>& notes) {
  std::vector<SidePair> out;
  for (const auto& s : specs) {
    try {
      out.push_back(rational_pair("rational " + describe(s), classical_sides(key, s, top), top));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::singular_pochhammer && e.kind() != ErrorKind::not_invertible &&
          e.kind() != ErrorKind::divergent_spec)
        throw;
      notes.push_back("skipped " + describe(s) + ": " + e.what());
    }
  }
  if (out.size() < 5)
    throw Error(ErrorKind::domain, "only " + std::to_string(out.size()) + " valid specializations, need 5");
  return out;
}

// ---------------------------------------------------------------------------
// Individual identities. Each builder returns pairs known through q^order.

std::vector<SidePair> build_eq11(int order, std::vector<std::string>&) {
  std::vector<SidePair> out;
  for (int n = 1; n <= 8; ++n) {
    QProduct<ZL> l(one, n * n), r(one, n);
    l.over(zm(z, 1), zm(one, 1), -n).over(zm(zi, 1), zm(one, 1), -n);
    r.times(zm(z, 0), zm(one, 1), n).times(zm(zi, 0), zm(one, 1), n);
    out.push_back({"summand n=" + std::to_string(n), through(l.expand(order), order), through(r.expand(order), order)});
  }
  return out;
}

std::vector<SidePair> build_eq12(int order, std::vector<std::string>&) {
  const int w = order + kMargin;
  const ZL c = (one + z) * (one + zi);
  const L lhs = scaled(lift(build_U(z, w)), c);
  BilateralSpec lambert;
  lambert.quad2 = 1;
  lambert.lin2 = 1;
  lambert.zeta_step = 1;
  lambert.pole = BilateralSpec::Pole{-1, -1, 1, 0};
  const PrefixedSeries t = bilateral_expand(lambert, w) * PrefixedSeries(build_P<ZL>(w)) * (one + zi);
  const L rhs = through(-lift(build_R(zm(-z, 0), 1, w)) + t.to_laurent(), order);
  return {{"U(zeta;q) against R(-zeta;q) and the Lambert series", through(lhs, order), rhs}};
}

std::vector<SidePair> build_lemma31(int order, std::vector<std::string>&) {
  const int w = order + kMargin;
  const L lhs = scaled(lift(build_Ubar(z, w)), (one - z) * (one - zi));
  QProduct<ZL> f;
  f.times(zm(-z, 1), zm(one, 1), kInfinity).times(zm(-zi, 1), zm(one, 1), kInfinity).over(zm(-one, 1), zm(one, 1), kInfinity);
  const L rhs = lift(build_Rbar(z, w)) - f.expand(w) * lift(build_R(zm(z, 0), 1, w));
  return {{"Ubar against Rbar and R", through(lhs, order), through(rhs, order)}};
}

// sum of prefixed terms against clearing * lhs_series, both times the
// denominators the terms carry.
SidePair prefixed_pair(std::string label, const Series<ZL>& lhs_series, const ZL& clearing,
                       const std::vector<PrefixedSeries>& terms, int order, std::vector<std::string>& notes) {
  ZL extra;
  const L rhs = clear_and_sum(terms, order, extra);
  if (!extra.is_one()) notes.push_back(label + ": both sides also multiplied by " + extra.to_string());
  return {std::move(label), through(scaled(lift(lhs_series), clearing * extra), order), rhs};
}

std::vector<SidePair> build_cor32(int order, std::vector<std::string>& notes) {
  const int w = order + kMargin;
  const PrefixedSeries e1 = eta(1, w), e2 = eta(2, w);
  const PrefixedSeries t1 = constant_prefixed(-2 * z, w) * e2 * appell(2, {1, 0, 0}, {0, 0, 1}, 1, w) *
                            e1.inverse().pow(2);
  const PrefixedSeries t2 = -(theta({1, 0, 1}, 1, w) * appell(3, {1, 0, 0}, {0, -1, 0}, 1, w) * e1.inverse() *
                              e2.inverse());
  const PrefixedSeries t3 = constant_prefixed(-z, w);
  return {prefixed_pair("(1-zeta^2) Ubar against Appell functions", build_Ubar(z, w), one - z * z, {t1, t2, t3},
                        order, notes)};
}

std::vector<SidePair> build_cor42(int order, std::vector<std::string>& notes) {
  const int w = order + kMargin;
  const PrefixedSeries e1 = eta(1, w), e2 = eta(2, w), e4 = eta(4, w);
  const PrefixedSeries t1 = unit_prefix(w, 1, 0, 2) * e2.pow(2) * theta({1, 0, 1}, 2, w) *
                            appell(2, {1, 1, 1}, {0, 1, 1}, 2, w) * e1.inverse().pow(2) * e4.inverse().pow(2);
  const PrefixedSeries t2 = unit_prefix(w, 1, -6, 3, 2) * mu({1, 1, 1}, {0, 0, 1}, 2, w);
  const PrefixedSeries t3 = constant_prefixed(z, w);
  return {prefixed_pair("(1-zeta^2) Ubar2(zeta;-q) against Appell and mu", negate_q(build_Ubar2(z, w)), one - z * z,
                        {t1, t2, t3}, order, notes)};
}

std::vector<SidePair> build_prop41(int order, std::vector<std::string>& notes) {
  const int w = order + kMargin;
  BilateralSpec s1, s2, s3;
  const BilateralSpec::Pole pole{-1, 1, 2, 1};
  s1.alternating = true;
  s1.quad2 = 4;
  s1.lin2 = 6;
  s1.pole = pole;
  s2.quad2 = 2;
  s2.lin2 = 6;
  s2.constant = 1;
  s2.pole = pole;
  s3.quad2 = 2;
  s3.lin2 = 2;
  s3.pole = pole;
  QProduct<ZL> f1(-2 * z * (one + z), 1);
  f1.times(zm(-z, 2), zm(one, 2), kInfinity).times(zm(-zi, 2), zm(one, 2), kInfinity);
  f1.times(zm(-one, 1), zm(one, 2), kInfinity).over(zm(one, 1), zm(one, 1), kInfinity);
  f1.over(zm(-one, 2), zm(one, 2), kInfinity);
  QProduct<ZL> f2(z * z), f3(-z);
  f2.times(zm(one, 2), zm(one, 4), kInfinity).over(zm(one, 4), zm(one, 4), kInfinity);
  f3.times(zm(one, 2), zm(one, 4), kInfinity).over(zm(one, 4), zm(one, 4), kInfinity);
  const std::vector<PrefixedSeries> terms = {prefixed(f1, w) * bilateral_expand(s1, w),
                                             prefixed(f2, w) * bilateral_expand(s2, w),
                                             prefixed(f3, w) * bilateral_expand(s3, w)};
  return {prefixed_pair("2(1-zeta^2) Ubar2(zeta;-q) against Lambert series", negate_q(build_Ubar2(z, w)),
                        2 * (one - z * z), terms, order, notes)};
}

std::vector<SidePair> build_cor52(int order, std::vector<std::string>& notes) {
  const int w = order + kMargin;
  const PrefixedSeries e1 = eta(1, w), e2 = eta(2, w);
  const PrefixedSeries r1 = unit_prefix(w, 0, 3, 0) * e1 * appell(2, {1, 0, 1}, {0, -1, 0}, 2, w) * e2.inverse().pow(2);
  const PrefixedSeries r2 = unit_prefix(w, -4, -39, 1) * theta({1, 0, 1}, 2, w) *
                            appell(3, {1, 1, 1}, {0, -2, 0}, 2, w) * e1.inverse() * e2.inverse();
  const PrefixedSeries r3 =
      unit_prefix(w, 1, 3, 2) * e1.pow(4) * e2.inverse().pow(2) * theta({1, 0, 1}, 1, w).inverse();
  const PrefixedSeries r4 = unit_prefix(w, -1, -5, 2) * theta({1, 0, 1}, 2, w) * e1.inverse();
  return {prefixed_pair("(1+zeta) U2(zeta;-q) against Appell and theta quotients", negate_q(build_U2(z, w)), one + z,
                        {r1, r2, r3, r4}, order, notes)};
}

std::vector<SidePair> build_prop51(int order, std::vector<std::string>&) {
  const int w = order + kMargin;
  const L lhs = scaled(lift(negate_q(build_U2(z, w))), (one + z) * (one + zi));
  const L t1 = -lift(negate_q(build_R2(-z, w)));
  QProduct<ZL> f2(-zi);
  f2.times(zm(-z, 0), zm(one, 2), kInfinity).times(zm(-zi, 0), zm(one, 2), kInfinity);
  f2.over(zm(-z, 1), zm(one, 1), 1).over(zm(one, 1), zm(one, 2), kInfinity);
  const L t2 = f2.expand(w) * lift(build_R(zm(-z, 1), 2, w));
  QProduct<ZL> f3;
  f3.times(zm(one, 1), zm(one, 1), kInfinity).times(zm(one, 1), zm(one, 2), kInfinity);
  f3.times(zm(one, 1), zm(one, 2), kInfinity).over(zm(-z, 1), zm(one, 1), kInfinity).over(zm(-zi, 1), zm(one, 1), kInfinity);
  QProduct<ZL> f4(zi);
  f4.times(zm(-z, 0), zm(one, 2), kInfinity).times(zm(-zi, 0), zm(one, 2), kInfinity);
  f4.over(zm(one, 1), zm(one, 2), kInfinity);
  const L rhs = t1 + t2 + f3.expand(w) + f4.expand(w);
  return {{"(1+zeta)(1+zeta^-1) U2(zeta;-q) against R2 and products", through(lhs, order), through(rhs, order)}};
}

// The n-th summand of Ubar2(zeta;-q^{-1}) in its rewritten form with
// positive q-powers.
QProduct<ZL> rewritten_summand(int n) {
  QProduct<ZL> f(n % 2 ? -one : one, n);
  f.times(zm(-z, 2), zm(one, 2), n - 1).times(zm(-zi, 2), zm(one, 2), n - 1);
  f.over(zm(one, 1), zm(one, 2), n).over(zm(-one, 2), zm(one, 2), n);
  return f;
}

std::vector<SidePair> build_false_dual(int order, std::vector<std::string>&) {
  std::vector<SidePair> out;
  // Cross-multiplied summands are Laurent polynomials.
  for (int n = 1; n <= 10; ++n) {
    QProduct<ZL> a(one, -2 * n), b(n % 2 ? -one : one, n);
    a.times(zm(-z, -2), zm(one, -2), n - 1).times(zm(-zi, -2), zm(one, -2), n - 1);
    a.times(zm(one, 1), zm(one, 2), n).times(zm(-one, 2), zm(one, 2), n);
    b.times(zm(-z, 2), zm(one, 2), n - 1).times(zm(-zi, 2), zm(one, 2), n - 1);
    b.times(zm(one, -1), zm(-one, -1), 2 * n);
    const int deg = 4 * n * n + 8 * n;
    out.push_back({"summand n=" + std::to_string(n) + " cross-multiplied", a.expand(deg), b.expand(deg)});
  }
  const int w = order + kMargin;
  LaurentAccumulator<ZL> acc(w);
  for (int n = 1; n <= w; ++n) acc.add(rewritten_summand(n).expand(w));
  const L sum = acc.result();
  Series<ZL> theta_side(w), false_side(w);
  for (int n = 1; n * n <= w; ++n) {
    const ZL sign = n % 2 ? -one : one;
    theta_side[n * n] = sign * (ZL::monomial(1 - n) - ZL::monomial(1 + n));
    false_side[n * n] = sign * ZL(n);
  }
  out.push_back({"(1-zeta^2) Ubar2(zeta;-1/q) against the partial theta series",
                 through(scaled(sum, one - z * z), order), through(lift(theta_side), order)});
  Series<ZL> at_one(sum.body.order());
  for (int k = 0; k <= sum.body.order(); ++k) at_one[k] = ZL(sum.body[k].at_one());
  out.push_back({"Ubar2(1;-1/q) against sum n(-1)^n q^(n^2)", through(L{sum.valuation, at_one}, order),
                 through(lift(false_side), order)});
  return out;
}

std::vector<SidePair> build_prop53(int order, std::vector<std::string>&) {
  auto convert = [](const Series<Mod2>& s) {
    Series<ZL> r(s.order());
    for (int n = 0; n <= s.order(); ++n) r[n] = s[n].v ? 1 : 0;
    return lift(r);
  };
  return {{"U2(1;q) mod 2: definition against the theta rewrite", convert(u2_mod2_from_definition(order)),
           convert(u2_mod2_series(order))}};
}

L thetid_lhs(int w) {
  LaurentAccumulator<ZL> acc(w);
  for (int n = 0; 2 * n <= w; ++n) {
    QProduct<ZL> f(one, 2 * n);
    f.times(one, 2, 2, n).times(one, 2, 2, n).over(one, 3, 2, n);
    acc.add(f.expand(w));
  }
  return acc.result();
}

L thetid_rhs(int w) {
  LaurentAccumulator<ZL> acc(w);
  for (int n = 0; n * n + 3 * n <= w; ++n) {
    for (int j = 0; j <= n; ++j) {
      const int e = 3 * n * n + 6 * n - 2 * j * j - 3 * j;
      if (e > w) continue;
      QProduct<ZL> f(n % 2 ? -one : one, e);
      f.times(one, 1, 1, 1).times(-one, 2 * n + 2, 1, 1).times(-one, 2 * j + 1, 1, 1).over(one, 2 * n + 2, 1, 1);
      acc.add(f.expand(w));
    }
  }
  return acc.result();
}

std::vector<SidePair> build_thetid(int order, std::vector<std::string>&) {
  return {{"Bailey application display", thetid_lhs(order), thetid_rhs(order)}};
}

std::vector<SidePair> build_prop54(int order, std::vector<std::string>&) {
  const Series<BigInt> ds = u2_double_sum(order);
  Series<BigInt> doubled(order), counts(order);
  for (int n = 0; n <= order; ++n) doubled[n] = 2 * ds[n];
  for (int k = 1; k <= order; ++k) counts[k] = BigInt(static_cast<long>(rep_count(16LL * k - 2)));
  Series<BigInt> cone(order);
  for (int n = 1; n * n <= 3 * order; ++n)
    for (int j = -n / 3; 3 * j <= n; ++j) {
      if (3 * j < -n) continue;
      const int e = n * n + n - 6 * j * j - 3 * j;
      if (e >= 0 && e <= order) cone[e] += 1;
    }
  return {{"2 x double sum against representation counts of 16k-2", from_integers(doubled), from_integers(counts)},
          {"indefinite cone sum against the double sum", from_integers(cone), from_integers(ds)}};
}

std::vector<SidePair> build_omega(int order, std::vector<std::string>&) {
  const int w = order + kMargin;
  LaurentAccumulator<ZL> acc(w);
  for (int n = 0; 2 * n * (n + 1) <= w; ++n) {
    QProduct<ZL> f(one, 2 * n * (n + 1));
    f.over(-one, 1, 2, n + 1).over(-one, 1, 2, n + 1);
    acc.add(f.expand(w));
  }
  QProduct<ZL> pre(-one, 1);
  pre.times(-one, 1, 1, 1);
  Series<ZL> base(w);
  base[0] = 1;
  base[1] = 1;
  const L rhs = lift(base) + pre.expand(w) * acc.result();
  return {{"R(-q;q^2) against the third-order omega", through(lift(build_R(zm(-one, 1), 2, w)), order),
           through(rhs, order)}};
}

std::vector<SidePair> build_heine(int order, std::vector<std::string>& notes) {
  auto out = classical_pairs("heine", default_classical_specs("heine"), order, notes);
  out.push_back(zeta_pair("zeta specialization a=zeta q^2, b=q^2, c=-zeta q^3, t=-q/zeta, base q^2",
                          heine_sides<ZL>({zm(z, 2), zm(one, 2), zm(-z, 3), zm(-zi, 1), 2}, order), order));
  return out;
}

std::vector<SidePair> build_watson(int order, std::vector<std::string>& notes) {
  auto out = classical_pairs("watson", default_classical_specs("watson"), order, notes);
  out.push_back(zeta_pair("zeta specialization a=q^2, b=-q, c->inf, d=-zeta q, e=-q/zeta, base q^2",
                          watson_sides<ZL>({zm(one, 2), zm(-one, 1), std::nullopt, zm(-z, 1), zm(-zi, 1), 2}, order),
                          order));
  return out;
}

std::vector<SidePair> build_ab621(int order, std::vector<std::string>& notes) {
  auto out = classical_pairs("ab621", default_classical_specs("ab621"), order, notes);
  out.push_back(zeta_pair(
      "zeta specialization a=-q, b=q^2, A=q^-2/zeta, B=-zeta q^2, base q^2",
      partial_theta_sides<ZL>({zm(-one, 1), zm(one, 2), zm(zi, -2), zm(-z, 2), 2}, order), order));
  return out;
}

std::vector<SidePair> build_ab6312(int order, std::vector<std::string>& notes) {
  auto out = classical_pairs("ab6312", default_classical_specs("ab6312"), order, notes);
  const ZL clear = (one - z) * (one - zi);
  out.push_back(zeta_pair("zeta specialization a=zeta, b=1/zeta, c=q, cleared by (1-zeta)(1-1/zeta)",
                          companion_sides<ZL>({zm(z, 0), zm(zi, 0), zm(one, 1)}, order, &clear), order));
  out.push_back(zeta_pair("zeta specialization a=zeta, b=1/zeta, c=-q, base q^2",
                          companion_sides<ZL>({zm(z, 0), zm(zi, 0), zm(-one, 1), 2}, order), order));
  return out;
}

std::vector<SidePair> build_bailey_lemma(int order, std::vector<std::string>&) {
  std::vector<SidePair> out;
  const std::vector<std::array<QM, 3>> specs = {{qm(1, 0), qm(2, 0), qm(3, 0)},
                                                {qm(1, 1), qm(1, 0), qm(Rational(1, 2), 0)},
                                                {qm(2, 2), qm(-1, 1), qm(1, 0)},
                                                {qm(1, 2), qm(3, 0), qm(-2, 1)},
                                                {qm(Rational(1, 3), 1), qm(1, 1), qm(2, 0)}};
  for (const auto& [a, r1, r2] : specs)
    out.push_back(rational_pair("unit pair a=" + describe(a) + " rho=" + describe(r1) + ", " + describe(r2),
                                apply_bailey_lemma(unit_bailey_pair(a), r1, r2, order), order));
  const Sides<ZL> s = apply_bailey_lemma(parity_bailey_pair<ZL>(), zm(one, 2), zm(one, 2), order);
  out.push_back(zeta_pair("parity pair with rho1=rho2=q^2", s, order));
  out.push_back({"parity pair lemma lhs against the displayed sum", through(s.lhs, order), thetid_lhs(order)});
  out.push_back({"parity pair lemma rhs against the displayed double sum", through(s.rhs, order), thetid_rhs(order)});
  return out;
}

std::vector<SidePair> build_lovejoy(int order, std::vector<std::string>&) {
  std::vector<SidePair> out;
  const int top = order;
  const std::vector<std::array<QM, 4>> specs = {
      {qm(1, 1), qm(2, 0), qm(3, 0), qm(5, 0)},
      {qm(1, 2), qm(1, 1), qm(-1, 0), qm(Rational(1, 2), 0)},
      {qm(3, 1), qm(1, 0), qm(2, 1), qm(-2, 0)},
      {qm(Rational(1, 2), 2), qm(3, 1), qm(1, 1), qm(1, 2)},
      {qm(2, 1), qm(-3, 0), qm(Rational(1, 3), 0), qm(4, 1)},
  };
  for (const auto& [a, b, c, d] : specs) {
    const auto pair = lovejoy_bailey_pair(a, b, c, d);
    const std::string name = "(" + describe(a) + ", " + describe(b) + ", " + describe(c) + ", " + describe(d) + ")";
    for (int n = 0; n <= 6; ++n)
      out.push_back(rational_pair("pair " + name + " n=" + std::to_string(n), bailey_relation_sides(pair, n, top), top));
  }
  const auto closed = parity_bailey_pair<ZL>();
  const auto limit = lovejoy_limit_pair<Rational>({1, 4}, {1, 1}, 2);
  const auto closed_q = parity_bailey_pair<Rational>();
  for (int n = 0; n <= 12; ++n) {
    out.push_back(zeta_pair("parity pair relation n=" + std::to_string(n), bailey_relation_sides(closed, n, order),
                            order));
    // alpha_n starts at q^{3n^2+4n}; compare it divided by that power.
    const int k = 3 * n * n + 4 * n;
    out.push_back(rational_pair("limit recipe alpha n=" + std::to_string(n) + " over q^" + std::to_string(k),
                                {shifted(limit.alpha(n, order + k), -k), shifted(closed_q.alpha(n, order + k), -k)},
                                order));
    out.push_back(rational_pair("limit recipe beta n=" + std::to_string(n),
                                {limit.beta(n, order), closed_q.beta(n, order)}, order));
  }
  return out;
}

std::vector<SidePair> build_jtp(int order, std::vector<std::string>&) {
  std::vector<SidePair> out;
  const int w = order + kMargin;
  const std::vector<EllipticArg> args = {{1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}, {-1, 0, 1}, {2, -1, 0}};
  for (int k = 1; k <= 2; ++k)
    for (const auto& a : args) {
      // Both sides times the inverse of the series-form prefix.
      const PrefixedSeries t = theta(a, k, w);
      const PrefixedSeries strip = unit_prefix(w, -t.zeta_half, -t.q24, -t.unit_tag);
      ZL el, er;
      const L lhs = clear_and_sum({t * strip}, order, el);
      const L rhs = clear_and_sum({theta_product(a, k, w) * strip}, order, er);
      out.push_back({"theta(" + a.to_string() + "; " + std::to_string(k) + "tau)", scaled(lhs, er), scaled(rhs, el)});
    }
  return out;
}

std::vector<IdentityRecord> make_catalog() {
  std::vector<IdentityRecord> c = {
      {"ab621", "partial-theta transformation, rational and zeta specializations", "1 (rational sides scaled by lcm)", 40,
       build_ab621},
      {"ab6312", "companion identity, rational and zeta specializations", "(1-zeta)(1-zeta^-1) on one zeta spec", 40,
       build_ab6312},
      {"bailey-lemma", "Bailey's lemma for the unit pair and the parity pair", "1", 40, build_bailey_lemma},
      {"cor3.2", "(1-zeta^2) Ubar as Appell functions over eta quotients", "1-zeta^2", 40, build_cor32},
      {"cor4.2", "(1-zeta^2) Ubar2(zeta;-q) via Appell and mu", "1-zeta^2", 40, build_cor42},
      {"cor5.2", "(1+zeta) U2(zeta;-q) via Appell and theta quotients", "1+zeta", 40, build_cor52},
      {"eq1.1", "summand relation between R and U", "1", 40, build_eq11},
      {"eq1.2", "U from R(-zeta) and a bilateral Lambert series", "(1+zeta)(1+zeta^-1)", 40, build_eq12},
      {"false-dual", "Ubar2 at -1/q and the false theta series", "1-zeta^2", 40, build_false_dual},
      {"heine", "Heine's transformation", "1 (rational sides scaled by lcm)", 40, build_heine},
      {"jtp", "Jacobi triple product for theta", "theta denominators", 40, build_jtp},
      {"lemma3.1", "(1-zeta)(1-zeta^-1) Ubar from Rbar and R", "(1-zeta)(1-zeta^-1)", 40, build_lemma31},
      {"lovejoy-bp", "four-parameter Bailey pair, its c->0 limit and the parity pair", "1", 40, build_lovejoy},
      {"omega", "R(-q;q^2) and the third-order omega", "1", 40, build_omega},
      {"prop4.1", "2(1-zeta^2) Ubar2(zeta;-q) as Lambert series", "2(1-zeta^2)", 40, build_prop41},
      {"prop5.1", "(1+zeta)(1+zeta^-1) U2(zeta;-q) from R2 and products", "(1+zeta)(1+zeta^-1)", 40, build_prop51},
      {"prop5.3-mod2", "U2(1;q) modulo 2", "1", 40, build_prop53},
      {"prop5.4", "theta double sum and representation counts", "1", 40, build_prop54},
      {"thetid", "parity double-sum identity", "1", 40, build_thetid},
      {"watson", "Watson's transformation", "1 (rational sides scaled by lcm)", 40, build_watson},
  };
  std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return c;
}

}  // namespace

const std::vector<IdentityRecord>& identity_catalog() {
  static const std::vector<IdentityRecord> catalog = make_catalog();
  return catalog;
}

const IdentityRecord& find_identity(std::string_view key) {
  for (const auto& r : identity_catalog())
    if (r.key == key) return r;
  throw Error(ErrorKind::unknown_identity, "no identity named '" + std::string(key) + "'");
}

std::optional<Mismatch> compare_sides(const SidePair& p, int order) {
  const int top = std::min({order, p.lhs.precision(), p.rhs.precision()});
  const int lo = std::min(p.lhs.valuation, p.rhs.valuation);
  for (int n = lo; n <= top; ++n) {
    const ZL a = p.lhs.coefficient(n), b = p.rhs.coefficient(n);
    if (a == b) continue;
    return Mismatch{p.label, (a - b).min_exponent(), n, a.to_string(), b.to_string()};
  }
  return std::nullopt;
}

VerificationReport verify(std::string_view key, int order, const std::optional<Perturbation>& perturb) {
  const IdentityRecord& rec = find_identity(key);
  if (order < 0) order = rec.default_order;
  VerificationReport r;
  r.key = rec.key;
  r.order = order;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::vector<SidePair> pairs = rec.build(order, r.notes);
    r.pairs = pairs.size();
    if (perturb) {
      if (perturb->pair >= pairs.size()) throw Error(ErrorKind::out_of_range, "perturbation pair index out of range");
      SidePair& p = pairs[perturb->pair];
      const int n = perturb->n.value_or(order / 2);
      if (n > p.rhs.precision()) throw Error(ErrorKind::out_of_range, "perturbation beyond the known precision");
      const L bump{n, Series<ZL>::monomial(ZL::monomial(perturb->m, BigInt(perturb->delta)), 0, p.rhs.precision() - n)};
      p.rhs = p.rhs + bump;
    }
    r.pass = true;
    for (const auto& p : pairs) {
      if (auto m = compare_sides(p, order)) {
        r.pass = false;
        r.mismatch = std::move(m);
        break;
      }
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::unknown_identity) throw;
    r.pass = false;
    r.error = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<VerificationReport> verify_all(int order, unsigned threads) {
  const auto& cat = identity_catalog();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cat.size()));
  std::vector<VerificationReport> out(cat.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cat.size(); i = next++) out[i] = verify(cat[i].key, order);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<ClassicalSpec> default_classical_specs(std::string_view key) {
  if (key == "heine")
    return {{{qm(1, 1), qm(1, 2), qm(1, 3), qm(1, 2)}},
            {{qm(2, 1), qm(Rational(1, 2), 1), qm(3, 2), qm(1, 1)}},
            {{qm(3, 0), qm(1, 1), qm(-2, 1), qm(1, 1)}},
            {{qm(Rational(1, 3), 2), qm(-1, 1), qm(5, 1), qm(2, 1)}},
            {{qm(-2, 0), qm(3, 2), qm(1, 1), qm(1, 2)}},
            {{qm(2, 1), qm(1, 1), qm(-1, 1), qm(1, 1)}, 2}};
  if (key == "watson")
    return {{{qm(1, 2), qm(2, 1), qm(3, 1), qm(1, 1), qm(-1, 1)}},
            {{qm(1, 1), qm(Rational(1, 2), 1), qm(2, 0), qm(Rational(1, 2), 0), qm(1, 1)}},
            {{qm(3, 2), qm(1, 1), qm(1, 1), qm(-1, 0), qm(2, 1)}},
            {{qm(1, 2), qm(1, 1), qm(-1, 1), qm(1, 1), qm(-2, 1)}, 2},
            {{qm(Rational(1, 2), 1), qm(2, 0), qm(3, 1), qm(1, 1), qm(1, 0)}},
            {{qm(1, 2), qm(-1, 1), qm(1, 1), qm(-1, 1)}},
            {{qm(1, 2), qm(-1, 1), qm(2, 1), qm(3, 1)}, 2}};
  if (key == "ab621")
    return {{{qm(1, 0), qm(1, 1), qm(2, 0), qm(3, 0)}},
            {{qm(2, 0), qm(1, 1), qm(Rational(1, 3), 0), qm(1, 1)}},
            {{qm(3, 0), qm(2, 1), qm(1, 1), qm(-1, 0)}},
            {{qm(-1, 1), qm(1, 2), qm(2, -2), qm(-3, 2)}, 2},
            {{qm(Rational(1, 2), 0), qm(1, 1), qm(1, 1), qm(1, 2)}}};
  if (key == "ab6312")
    return {{{qm(1, 0), qm(2, 0), qm(3, 0)}},
            {{qm(Rational(1, 2), 0), qm(1, 1), qm(1, 0)}},
            {{qm(2, 0), qm(3, 0), qm(1, 1)}},
            {{qm(1, 1), qm(-1, 0), qm(Rational(1, 2), 0)}},
            {{qm(3, 0), qm(Rational(1, 3), 0), qm(-1, 1)}, 2}};
  throw Error(ErrorKind::unknown_identity, "no rational specializations for '" + std::string(key) + "'");
}

VerificationReport verify_classical(std::string_view key, const std::vector<ClassicalSpec>& specs, int order) {
  VerificationReport r;
  r.key = std::string(key);
  r.order = order;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const auto pairs = classical_pairs(key, specs, order, r.notes);
    r.pairs = pairs.size();
    r.pass = true;
    for (const auto& p : pairs)
      if (auto m = compare_sides(p, order)) {
        r.pass = false;
        r.mismatch = std::move(m);
        break;
      }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::unknown_identity) throw;
    r.pass = false;
    r.error = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace unimodal
