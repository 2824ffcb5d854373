#pragma once

// Bailey pairs relative to (a, Q), Q = q^step:
//   beta_n = sum_{0<=j<=n} alpha_j / ((Q;Q)_{n-j} (aQ;Q)_{n+j}),
// and Bailey's lemma in its standard form,
//   sum (r1,r2;Q)_n x^n beta_n
//     = (aQ/r1, aQ/r2;Q)_inf / (aQ, x;Q)_inf  sum (r1,r2;Q)_n x^n / (aQ/r1, aQ/r2;Q)_n alpha_n
// with x = aQ/(r1 r2).

#include <climits>
#include <functional>
#include <optional>
#include <string>

#include "unimodal/classical.hpp"

namespace unimodal {

template <class R>
struct BaileyPair {
  std::string name;
  Monomial<R> a;
  int step = 1;
  /// alpha_n and beta_n through q^top.
  std::function<Laurent<R>(int n, int top)> alpha;
  std::function<Laurent<R>(int n, int top)> beta;
  /// Lower bounds for the q-orders of alpha_n and beta_n.
  std::function<int(int n)> alpha_order;
  std::function<int(int n)> beta_order;
};

struct BaileyCheck {
  bool pass = true;
  int checked_through = -1;
  std::optional<int> failing_n;
  std::optional<int> q_power;
};

inline constexpr int kVanishingOrder = INT_MAX / 4;

/// beta_n and the alpha sum it should equal, through q^top.
template <class R>
Sides<R> bailey_relation_sides(const BaileyPair<R>& p, int n, int top) {
  const int s = p.step;
  const Monomial<R> Q = qpow<R>(s, 1), aQ = p.a * Q;
  LaurentAccumulator<R> acc(top);
  for (int j = 0; j <= n; ++j) {
    if (p.alpha_order(j) == kVanishingOrder) continue;
    QProduct<R> d;
    d.over(Q, Q, n - j).over(aQ, Q, n + j);
    acc.add(product_through(d, p.alpha(j, top - d.valuation()), top));
  }
  return {through(p.beta(n, top), top), acc.result()};
}

/// The defining relation for n = 0..n_max, compared through q^top.
template <class R>
BaileyCheck check_bailey_pair(const BaileyPair<R>& p, int n_max, int top) {
  BaileyCheck out;
  for (int n = 0; n <= n_max; ++n) {
    const Sides<R> sd = bailey_relation_sides(p, n, top);
    if (auto m = first_difference(sd.lhs, sd.rhs)) {
      out.pass = false;
      out.failing_n = n;
      out.q_power = *m;
      return out;
    }
    out.checked_through = n;
  }
  return out;
}

/// Both sides of Bailey's lemma through q^top. The pair is checked first
/// for n <= check_n; a failure raises bailey-relation.
template <class R>
Sides<R> apply_bailey_lemma(const BaileyPair<R>& p, const Monomial<R>& r1, const Monomial<R>& r2, int top,
                            int check_n = 8) {
  const BaileyCheck c = check_bailey_pair(p, check_n, std::min(top, 40));
  if (!c.pass)
    throw Error(ErrorKind::bailey_relation, p.name + " fails the defining relation at n = " +
                                                std::to_string(*c.failing_n) + ", q^" + std::to_string(*c.q_power));
  const int s = p.step;
  const Monomial<R> Q = qpow<R>(s, 1), aQ = p.a * Q;
  const Monomial<R> x = aQ * mono_inv(r1 * r2), aQr1 = aQ * mono_inv(r1), aQr2 = aQ * mono_inv(r2);
  if (x.q_exp < 1) throw Error(ErrorKind::divergent_spec, "Bailey's lemma needs aQ/(r1 r2) of positive q-order");
  const int ns = stable_index<R>(s, {p.a, r1, r2, aQr1, aQr2});
  auto lhs_factor = [&](int n) {
    QProduct<R> f = qp(mono_pow(x, n));
    return f.times(r1, Q, n).times(r2, Q, n);
  };
  auto rhs_factor = [&](int n) { return lhs_factor(n).over(aQr1, Q, n).over(aQr2, Q, n); };
  auto sum_of = [&](auto&& factor, const auto& seq, const auto& order, int t, std::string_view what) {
    return series_sum<R>(
        0, ns, t,
        [&](int n) {
          const QProduct<R> f = factor(n);
          return product_through(f, seq(n, t - f.valuation()), t);
        },
        [&](int n) {
          const int o = order(n);
          return o == kVanishingOrder ? kVanishingOrder : factor(n).valuation() + o;
        },
        what);
  };
  Sides<R> out;
  out.lhs = sum_of(lhs_factor, p.beta, p.beta_order, top, "Bailey lhs");
  QProduct<R> pre;
  pre.times(aQr1, Q, kInfinity).times(aQr2, Q, kInfinity).over(aQ, Q, kInfinity).over(x, Q, kInfinity);
  out.rhs = product_through(pre, sum_of(rhs_factor, p.alpha, p.alpha_order, top - pre.valuation(), "Bailey rhs"), top);
  return out;
}

/// alpha_n = [n = 0], beta_n = 1 / ((Q;Q)_n (aQ;Q)_n).
template <class R>
BaileyPair<R> unit_bailey_pair(const Monomial<R>& a, int step = 1) {
  BaileyPair<R> p;
  p.name = "unit pair";
  p.a = a;
  p.step = step;
  const Monomial<R> Q = qpow<R>(step, 1), aQ = a * Q;
  auto beta_q = [=](int n) {
    QProduct<R> f;
    return f.over(Q, Q, n).over(aQ, Q, n);
  };
  p.alpha = [](int n, int top) -> Laurent<R> {
    if (n != 0) return {top + 1, Series<R>(0)};
    return {0, Series<R>::one(std::max(top, 0))};
  };
  p.alpha_order = [](int n) { return n == 0 ? 0 : kVanishingOrder; };
  p.beta = [=](int n, int top) { return beta_q(n).expand(top); };
  p.beta_order = [=](int n) { return beta_q(n).valuation(); };
  return p;
}

namespace bailey_detail {

/// Sum of inner(j) for j = 0..n, each expanded through q^top.
template <class R, class Inner>
Laurent<R> finite_sum(int n, int top, Inner&& inner) {
  LaurentAccumulator<R> acc(top);
  for (int j = 0; j <= n; ++j) acc.add(inner(j).expand(top));
  return acc.result();
}

template <class R, class Inner>
int finite_sum_order(int n, Inner&& inner) {
  int v = kVanishingOrder;
  for (int j = 0; j <= n; ++j) v = std::min(v, inner(j).valuation());
  return v;
}

template <class R, class Pre, class Inner>
void set_alpha(BaileyPair<R>& p, Pre pre, Inner inner) {
  p.alpha = [=](int n, int top) {
    const QProduct<R> f = pre(n);
    return product_through(f, finite_sum<R>(n, top - f.valuation(), inner), top);
  };
  p.alpha_order = [=](int n) { return pre(n).valuation() + finite_sum_order<R>(n, inner); };
}

}  // namespace bailey_detail

/// The four-parameter pair built from (a, b, c, d):
///   alpha_n = (a/b,a/c,a/d)_n (1 - aQ^{2n}) (-bcdQ)^n Q^{n(n-1)/2} / ((1-a)(bQ,cQ,dQ)_n a^n)
///             * sum_j (a)_{j-1} (b,c,d)_j (1 - aQ^{2j-1}) a^j / ((Q,a/b,a/c,a/d)_j (bcd)^j),
///   beta_n  = (bcdQ/a)_n / (bQ,cQ,dQ)_n.
/// At j = 0, (a)_{-1} = 1/(1 - a/Q) by the negative-index convention.
/// `printed_beta` swaps in the numerator (adQ/bc)_n instead; that variant
/// does not satisfy the defining relation and is kept as a control.
template <class R>
BaileyPair<R> lovejoy_bailey_pair(const Monomial<R>& a, const Monomial<R>& b, const Monomial<R>& c,
                                  const Monomial<R>& d, int step = 1, bool printed_beta = false) {
  BaileyPair<R> p;
  p.name = printed_beta ? "four-parameter pair (printed beta)" : "four-parameter pair";
  p.a = a;
  p.step = step;
  const Monomial<R> Q = qpow<R>(step, 1);
  const Monomial<R> ab = a * mono_inv(b), ac = a * mono_inv(c), ad = a * mono_inv(d);
  const Monomial<R> bcd = b * c * d, mbcdQ = mono_neg(bcd * Q);
  const Monomial<R> top_param = printed_beta ? a * d * Q * mono_inv(b * c) : bcd * Q * mono_inv(a);
  auto pre = [=](int n) {
    QProduct<R> f = qp(mono_pow(mbcdQ, n) * qpow<R>(step, n * (n - 1) / 2) * mono_pow(mono_inv(a), n));
    f.times(ab, Q, n).times(ac, Q, n).times(ad, Q, n).times(a * qpow<R>(step, 2 * n), Q, 1);
    return f.over(a, Q, 1).over(b * Q, Q, n).over(c * Q, Q, n).over(d * Q, Q, n);
  };
  auto inner = [=](int j) {
    QProduct<R> f = qp(mono_pow(a * mono_inv(bcd), j));
    f.times(a, Q, j - 1).times(b, Q, j).times(c, Q, j).times(d, Q, j).times(a * qpow<R>(step, 2 * j - 1), Q, 1);
    return f.over(Q, Q, j).over(ab, Q, j).over(ac, Q, j).over(ad, Q, j);
  };
  bailey_detail::set_alpha(p, pre, inner);
  auto beta_q = [=](int n) {
    QProduct<R> f;
    return f.times(top_param, Q, n).over(b * Q, Q, n).over(c * Q, Q, n).over(d * Q, Q, n);
  };
  p.beta = [=](int n, int top) { return beta_q(n).expand(top); };
  p.beta_order = [=](int n) { return beta_q(n).valuation(); };
  return p;
}

/// The d = c^2, c -> 0 limit of the four-parameter pair, term by term:
///   alpha_n = (a/b)_n (1 - aQ^{2n}) (-1)^n a^n b^n Q^n Q^{3n(n-1)/2} / ((1-a)(bQ)_n)
///             * sum_j (a)_{j-1} (b)_j (1 - aQ^{2j-1}) / ((Q,a/b)_j a^j b^j Q^{j(j-1)}),
///   beta_n  = 1 / (bQ)_n.
template <class R>
BaileyPair<R> lovejoy_limit_pair(const Monomial<R>& a, const Monomial<R>& b, int step = 1) {
  BaileyPair<R> p;
  p.name = "c -> 0 limit pair";
  p.a = a;
  p.step = step;
  const Monomial<R> Q = qpow<R>(step, 1);
  const Monomial<R> ab = a * mono_inv(b);
  auto pre = [=](int n) {
    Monomial<R> m = mono_pow(a * b * Q, n) * qpow<R>(step, 3 * n * (n - 1) / 2);
    if (n % 2 != 0) m = mono_neg(m);
    QProduct<R> f = qp(m);
    f.times(ab, Q, n).times(a * qpow<R>(step, 2 * n), Q, 1);
    return f.over(a, Q, 1).over(b * Q, Q, n);
  };
  auto inner = [=](int j) {
    QProduct<R> f = qp(mono_inv(mono_pow(a * b, j) * qpow<R>(step, j * (j - 1))));
    f.times(a, Q, j - 1).times(b, Q, j).times(a * qpow<R>(step, 2 * j - 1), Q, 1);
    return f.over(Q, Q, j).over(ab, Q, j);
  };
  bailey_detail::set_alpha(p, pre, inner);
  auto beta_q = [=](int n) {
    QProduct<R> f;
    return f.over(b * Q, Q, n);
  };
  p.beta = [=](int n, int top) { return beta_q(n).expand(top); };
  p.beta_order = [=](int n) { return beta_q(n).valuation(); };
  return p;
}

/// The explicit pair relative to (q^4, q^2) with beta_n = 1/(q^3;q^2)_n:
///   alpha_n = (-1)^n (1 - q^{4n+4}) q^{3n^2+4n} (1 - q) / ((1 - q^2)(1 - q^4))
///             * sum_{0<=j<=n} (1 + q^{2j+1}) q^{-2j^2-3j}.
template <class R>
BaileyPair<R> parity_bailey_pair() {
  BaileyPair<R> p;
  p.name = "(q^4, q^2) parity pair";
  p.a = {RingTraits<R>::one(), 4};
  p.step = 2;
  const R one = RingTraits<R>::one();
  auto pre = [=](int n) {
    QProduct<R> f(n % 2 != 0 ? R(-one) : one, 3 * n * n + 4 * n);
    f.times(one, 4 * n + 4, 1, 1).times(one, 1, 1, 1);
    return f.over(one, 2, 1, 1).over(one, 4, 1, 1);
  };
  auto inner = [=](int j) {
    QProduct<R> f(one, -2 * j * j - 3 * j);
    return f.times(R(-one), 2 * j + 1, 1, 1);
  };
  bailey_detail::set_alpha(p, pre, inner);
  auto beta_q = [=](int n) {
    QProduct<R> f;
    return f.over(one, 3, 2, n);
  };
  p.beta = [=](int n, int top) { return beta_q(n).expand(top); };
  p.beta_order = [=](int n) { return beta_q(n).valuation(); };
  return p;
}

}  // namespace unimodal
