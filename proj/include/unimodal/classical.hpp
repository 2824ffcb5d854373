#pragma once

// Both sides of the classical basic-hypergeometric transformations, for
// parameters specialized to monomials c * q^j. Every lemma works in base
// Q = q^step. A clearing factor, when given, multiplies each side and is
// threaded into the sums (never into the infinite prefactors), so that
// denominators such as (1 - zeta) can be divided out exactly.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "unimodal/laurent_ops.hpp"
#include "unimodal/qproduct.hpp"

namespace unimodal {

template <class R>
struct Sides {
  Laurent<R> lhs;
  Laurent<R> rhs;
};

template <class R>
Monomial<R> mono_inv(const Monomial<R>& x) {
  return {RingTraits<R>::inverse(x.coeff), -x.q_exp};
}

template <class R>
Monomial<R> mono_pow(const Monomial<R>& x, int n) {
  Monomial<R> r;
  const Monomial<R> b = n >= 0 ? x : mono_inv(x);
  for (int i = 0; i < std::abs(n); ++i) r = r * b;
  return r;
}

template <class R>
Monomial<R> mono_neg(const Monomial<R>& x) {
  return {R(-x.coeff), x.q_exp};
}

/// Q^k for Q = q^step.
template <class R>
Monomial<R> qpow(int step, int k) {
  return {RingTraits<R>::one(), step * k};
}

/// QProduct starting from a monomial scalar.
template <class R>
QProduct<R> qp(const Monomial<R>& m) {
  return QProduct<R>(m.coeff, m.q_exp);
}

/// Index after which no parameter with negative q-order can still change
/// the structural order of a finite Pochhammer block.
template <class R>
int stable_index(int step, std::initializer_list<Monomial<R>> params) {
  int worst = 0;
  for (const auto& p : params) worst = std::max(worst, -p.q_exp);
  return 2 + worst / step + 1;
}

/// f * g through q^top. `g` must be known through q^(top - f.valuation()).
template <class R>
Laurent<R> product_through(const QProduct<R>& f, const Laurent<R>& g, int top) {
  const Laurent<R> gt = trimmed(g);
  if (is_zero(gt)) {
    if (g.precision() < top - f.valuation())
      throw Error(ErrorKind::order_mismatch, "cofactor known through too few terms");
    return {top + 1, Series<R>(0)};
  }
  return through(f.expand(top - gt.valuation) * gt, top);
}

/// Sum over n >= n0 of make(n), expanded with the clearing factor.
template <class R, class Make>
Laurent<R> qsum(int n0, int n_stable, int top, const R* clear, Make&& make, std::string_view what) {
  return series_sum<R>(
      n0, n_stable, top, [&](int n) { return make(n).expand(top, clear); },
      [&](int n) { return make(n).valuation(); }, what);
}

/// prefactor * sum, with the sum taken far enough for the product.
template <class R, class Make>
Laurent<R> prefactor_times_sum(const QProduct<R>& pre, int n0, int n_stable, int top, const R* clear, Make&& make,
                               std::string_view what) {
  const int inner_top = top - pre.valuation();
  return product_through(pre, qsum<R>(n0, n_stable, inner_top, clear, make, what), top);
}

// ---------------------------------------------------------------------------
// Heine:
//   sum (a,b;Q)_n t^n / (c,Q;Q)_n
//     = (b,at;Q)_inf / (c,t;Q)_inf  sum (c/b,t;Q)_n b^n / (at,Q;Q)_n.

template <class R>
struct HeineParams {
  Monomial<R> a, b, c, t;
  int step = 1;
};

template <class R>
Sides<R> heine_sides(const HeineParams<R>& p, int top, const R* clear = nullptr) {
  const int s = p.step;
  const Monomial<R> Q = qpow<R>(s, 1);
  const Monomial<R> at = p.a * p.t, cb = p.c * mono_inv(p.b);
  const int ns = stable_index<R>(s, {p.a, p.b, p.c, p.t, at, cb});
  Sides<R> out;
  out.lhs = qsum<R>(0, ns, top, clear, [&](int n) {
    QProduct<R> f = qp(mono_pow(p.t, n));
    return f.times(p.a, Q, n).times(p.b, Q, n).over(p.c, Q, n).over(Q, Q, n);
  }, "heine lhs");
  QProduct<R> pre;
  pre.times(p.b, Q, kInfinity).times(at, Q, kInfinity).over(p.c, Q, kInfinity).over(p.t, Q, kInfinity);
  out.rhs = prefactor_times_sum<R>(pre, 0, ns, top, clear, [&](int n) {
    QProduct<R> f = qp(mono_pow(p.b, n));
    return f.times(cb, Q, n).times(p.t, Q, n).over(at, Q, n).over(Q, Q, n);
  }, "heine rhs");
  return out;
}

// ---------------------------------------------------------------------------
// Watson, with (sqrt a q, -sqrt a q)_n / (sqrt a, -sqrt a)_n written as
// (1 - a Q^{2n}) / (1 - a). With no c the c -> infinity limit is taken:
// (c)_n / c^n -> (-1)^n Q^{n(n-1)/2} and (aQ/bc)_n, (aQ/c)_n -> 1.

template <class R>
struct WatsonParams {
  Monomial<R> a, b;
  std::optional<Monomial<R>> c;
  Monomial<R> d, e;
  int step = 1;
};

template <class R>
Sides<R> watson_sides(const WatsonParams<R>& p, int top, const R* clear = nullptr) {
  const int s = p.step;
  const Monomial<R> Q = qpow<R>(s, 1);
  const Monomial<R> aQ = p.a * Q;
  const Monomial<R> aQde = aQ * mono_inv(p.d * p.e);
  const Monomial<R> aQb = aQ * mono_inv(p.b), aQd = aQ * mono_inv(p.d), aQe = aQ * mono_inv(p.e);
  const int ns = stable_index<R>(s, {p.a, p.b, p.d, p.e, aQde, aQb, aQd, aQe}) + (p.c ? std::max(0, -p.c->q_exp) / s : 0);
  Sides<R> out;
  out.lhs = qsum<R>(0, ns, top, clear, [&](int n) {
    QProduct<R> f = qp(mono_pow(aQde, n));
    f.times(p.d, Q, n).times(p.e, Q, n).over(Q, Q, n).over(aQb, Q, n);
    if (p.c) {
      f.times(aQ * mono_inv(p.b * *p.c), Q, n).over(aQ * mono_inv(*p.c), Q, n);
    }
    return f;
  }, "watson lhs");
  QProduct<R> pre;
  pre.times(aQd, Q, kInfinity).times(aQe, Q, kInfinity).over(aQ, Q, kInfinity).over(aQde, Q, kInfinity);
  out.rhs = prefactor_times_sum<R>(pre, 0, ns, top, clear, [&](int n) {
    Monomial<R> m = mono_pow(aQ, 2 * n);
    QProduct<R> f;
    if (p.c) {
      m = m * mono_inv(mono_pow(p.b * *p.c * p.d * p.e, n)) * qpow<R>(s, n * (n - 1) / 2);
      if (n % 2 != 0) m = mono_neg(m);
      f = qp(m);
      f.times(*p.c, Q, n).over(aQ * mono_inv(*p.c), Q, n);
    } else {
      m = m * mono_inv(mono_pow(p.b * p.d * p.e, n)) * qpow<R>(s, n * (n - 1));
      f = qp(m);
    }
    f.times(p.a, Q, n).times(p.b, Q, n).times(p.d, Q, n).times(p.e, Q, n);
    f.over(Q, Q, n).over(aQb, Q, n).over(aQd, Q, n).over(aQe, Q, n);
    f.times(p.a * qpow<R>(s, 2 * n), Q, 1).over(p.a, Q, 1);
    return f;
  }, "watson rhs");
  return out;
}

// ---------------------------------------------------------------------------
// Partial-theta transformation:
//   sum (B,-AbQ;Q)_n Q^n / (-aQ,-bQ;Q)_n
//     = -(B,-AbQ;Q)_inf / (a (-aQ,-bQ;Q)_inf) sum (1/A;Q)_n (AbQ/a)^n / (-B/a;Q)_{n+1}
//       + (1+b) sum (-1/a;Q)_{n+1} (-ABQ/a;Q)_n (-b)^n / (-B/a, AbQ/a;Q)_{n+1}.

template <class R>
struct PartialThetaParams {
  Monomial<R> a, b, A, B;
  int step = 1;
};

template <class R>
Sides<R> partial_theta_sides(const PartialThetaParams<R>& p, int top, const R* clear = nullptr) {
  const int s = p.step;
  const Monomial<R> Q = qpow<R>(s, 1);
  const Monomial<R> ainv = mono_inv(p.a);
  const Monomial<R> AbQ = p.A * p.b * Q;
  const Monomial<R> mAbQ = mono_neg(AbQ), maQ = mono_neg(p.a * Q), mbQ = mono_neg(p.b * Q);
  const Monomial<R> Ainv = mono_inv(p.A), mBa = mono_neg(p.B * ainv), AbQa = AbQ * ainv;
  const Monomial<R> mainv = mono_neg(ainv), mABQa = mono_neg(p.A * p.B * Q * ainv), mb = mono_neg(p.b);
  const int ns = stable_index<R>(s, {p.B, mAbQ, maQ, mbQ, Ainv, mBa, AbQa, mainv, mABQa});
  Sides<R> out;
  out.lhs = qsum<R>(0, ns, top, clear, [&](int n) {
    QProduct<R> f = qp(qpow<R>(s, n));
    return f.times(p.B, Q, n).times(mAbQ, Q, n).over(maQ, Q, n).over(mbQ, Q, n);
  }, "partial-theta lhs");
  QProduct<R> pre = qp(mono_neg(ainv));
  pre.times(p.B, Q, kInfinity).times(mAbQ, Q, kInfinity).over(maQ, Q, kInfinity).over(mbQ, Q, kInfinity);
  const Laurent<R> first = prefactor_times_sum<R>(pre, 0, ns, top, clear, [&](int n) {
    QProduct<R> f = qp(mono_pow(AbQa, n));
    return f.times(Ainv, Q, n).over(mBa, Q, n + 1);
  }, "partial-theta rhs first");
  const Laurent<R> second = qsum<R>(0, ns, top, clear, [&](int n) {
    QProduct<R> f = qp(mono_pow(mb, n));
    f.times(mb, Q, 1);
    return f.times(mainv, Q, n + 1).times(mABQa, Q, n).over(mBa, Q, n + 1).over(AbQa, Q, n + 1);
  }, "partial-theta rhs second");
  out.rhs = through(first + second, top);
  return out;
}

// ---------------------------------------------------------------------------
// The companion identity:
//   sum_{n>=0} (-aQ,-bQ;Q)_n Q^{n+1} / (-cQ;Q)_n
//     = sum_{n>=1} (-1/c;Q)_n (ab/c)^{n-1} Q^{n(n+1)/2} / (aQ/c,bQ/c;Q)_n
//       - (-aQ,-bQ;Q)_inf / (c (-cQ;Q)_inf) sum_{n>=1} (ab/c^2)^{n-1} Q^{n^2} / (aQ/c,bQ/c;Q)_n.

template <class R>
struct CompanionParams {
  Monomial<R> a, b, c;
  int step = 1;
};

template <class R>
Sides<R> companion_sides(const CompanionParams<R>& p, int top, const R* clear = nullptr) {
  const int s = p.step;
  const Monomial<R> Q = qpow<R>(s, 1);
  const Monomial<R> cinv = mono_inv(p.c);
  const Monomial<R> maQ = mono_neg(p.a * Q), mbQ = mono_neg(p.b * Q), mcQ = mono_neg(p.c * Q);
  const Monomial<R> mcinv = mono_neg(cinv), abc = p.a * p.b * cinv, abcc = abc * cinv;
  const Monomial<R> aQc = p.a * Q * cinv, bQc = p.b * Q * cinv;
  const int ns = stable_index<R>(s, {maQ, mbQ, mcQ, mcinv, abc, abcc, aQc, bQc}) + std::max(0, -abc.q_exp);
  Sides<R> out;
  out.lhs = qsum<R>(0, ns, top, clear, [&](int n) {
    QProduct<R> f = qp(qpow<R>(s, n + 1));
    return f.times(maQ, Q, n).times(mbQ, Q, n).over(mcQ, Q, n);
  }, "companion lhs");
  const Laurent<R> first = qsum<R>(1, ns, top, clear, [&](int n) {
    QProduct<R> f = qp(mono_pow(abc, n - 1) * qpow<R>(s, n * (n + 1) / 2));
    return f.times(mcinv, Q, n).over(aQc, Q, n).over(bQc, Q, n);
  }, "companion rhs first");
  QProduct<R> pre = qp(mono_neg(cinv));
  pre.times(maQ, Q, kInfinity).times(mbQ, Q, kInfinity).over(mcQ, Q, kInfinity);
  const Laurent<R> second = prefactor_times_sum<R>(pre, 1, ns, top, clear, [&](int n) {
    QProduct<R> f = qp(mono_pow(abcc, n - 1) * qpow<R>(s, n * n));
    return f.over(aQc, Q, n).over(bQc, Q, n);
  }, "companion rhs second");
  out.rhs = through(first + second, top);
  return out;
}

/// Common denominator of a rational Laurent series.
inline BigInt denominator_lcm(const Laurent<Rational>& a) {
  BigInt l = 1;
  for (int k = 0; k <= a.body.order(); ++k) {
    const BigInt& d = a.body[k].get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

}  // namespace unimodal
