#pragma once

// Generating-function builders, generic over the coefficient ring so the
// same code serves the two-variable series (R = ZetaLaurent, x = zeta) and
// the zeta = 1 specializations over big integers.
//
// Each builder keeps a running summand t_n updated by a one-step recurrence
// and stops once the documented lower bound on ord_q(t_n) exceeds the order.
// The bound is checked against the actual term at runtime.

#include <string>

#include "unimodal/qproduct.hpp"

namespace unimodal {

namespace detail {

template <class R>
void check_term_bound(const Series<R>& t, int bound, const char* builder, int n) {
  if (bound <= t.order() && t.valuation() < bound)
    throw Error(ErrorKind::domain, std::string(builder) + ": term " + std::to_string(n) +
                                       " has q-order " + std::to_string(t.valuation()) +
                                       " below its documented bound " + std::to_string(bound));
}

template <class R>
Monomial<R> inverse(const Monomial<R>& x) {
  return {RingTraits<R>::inverse(x.coeff), -x.q_exp};
}

/// t <- t * (1 + c q^e) for e >= 0.
template <class R>
void times_plus(Series<R>& t, const R& c, int e) {
  mul_binomial(t, RingTraits<R>::one(), c, e);
}

/// t <- t / (1 - c q^e), e >= 1.
template <class R>
void over_minus(Series<R>& t, const R& c, int e) {
  if (e <= 0) throw Error(ErrorKind::singular_pochhammer, "denominator factor without positive q-order");
  if (e > t.order()) return;
  div_binomial(t, RingTraits<R>::one(), R(-c), e);
}

}  // namespace detail

/// U(x;q) = sum_{n>=1} (-xq, -x^{-1}q; q)_{n-1} q^n. Term bound: n.
template <class R>
Series<R> build_U(const R& x, int order) {
  using T = RingTraits<R>;
  const R xi = T::inverse(x);
  Series<R> sum(order), t = Series<R>::monomial(T::one(), 1, order);
  for (int n = 1; n <= order; ++n) {
    detail::check_term_bound(t, n, "U", n);
    sum += t;
    detail::times_plus(t, x, n);
    detail::times_plus(t, xi, n);
    t = shift_q(t, 1);
  }
  return sum;
}

/// R(x;q^s) = sum_{n>=0} q^{s n^2} / (x q^s, x^{-1} q^s; q^s)_n for a
/// monomial x = c q^e. Every denominator factor must have positive q-order,
/// so the term bound is s n^2.
template <class R>
Series<R> build_R(const Monomial<R>& x, int s, int order) {
  const Monomial<R> xi = detail::inverse(x);
  Series<R> sum(order), t = Series<R>::one(order);
  for (int n = 0; s * n * n <= order; ++n) {
    if (n > 0) {
      t = shift_q(t, s * (2 * n - 1));
      detail::over_minus(t, x.coeff, x.q_exp + s * n);
      detail::over_minus(t, xi.coeff, xi.q_exp + s * n);
    }
    detail::check_term_bound(t, s * n * n, "R", n);
    sum += t;
  }
  return sum;
}

/// Rbar(x;q) = sum_{n>=0} (-1;q)_n q^{n(n+1)/2} / (xq, x^{-1}q; q)_n.
/// Term bound: n(n+1)/2.
template <class R>
Series<R> build_Rbar(const R& x, int order) {
  using T = RingTraits<R>;
  const R xi = T::inverse(x);
  Series<R> sum(order), t = Series<R>::one(order);
  for (int n = 0; n * (n + 1) / 2 <= order; ++n) {
    if (n > 0) {
      detail::times_plus(t, T::one(), n - 1);
      t = shift_q(t, n);
      detail::over_minus(t, x, n);
      detail::over_minus(t, xi, n);
    }
    detail::check_term_bound(t, n * (n + 1) / 2, "Rbar", n);
    sum += t;
  }
  return sum;
}

/// Rbar2(x;q) = sum_{n>=0} (-1;q)_{2n} q^n / (xq^2, x^{-1}q^2; q^2)_n.
/// Term bound: n.
template <class R>
Series<R> build_Rbar2(const R& x, int order) {
  using T = RingTraits<R>;
  const R xi = T::inverse(x);
  Series<R> sum(order), t = Series<R>::one(order);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      detail::times_plus(t, T::one(), 2 * n - 2);
      detail::times_plus(t, T::one(), 2 * n - 1);
      t = shift_q(t, 1);
      detail::over_minus(t, x, 2 * n);
      detail::over_minus(t, xi, 2 * n);
    }
    detail::check_term_bound(t, n, "Rbar2", n);
    sum += t;
  }
  return sum;
}

/// R2(x;q) = sum_{n>=0} (-q;q^2)_n q^{n^2} / (xq^2, x^{-1}q^2; q^2)_n.
/// Term bound: n^2.
template <class R>
Series<R> build_R2(const R& x, int order) {
  using T = RingTraits<R>;
  const R xi = T::inverse(x);
  Series<R> sum(order), t = Series<R>::one(order);
  for (int n = 0; n * n <= order; ++n) {
    if (n > 0) {
      detail::times_plus(t, T::one(), 2 * n - 1);
      t = shift_q(t, 2 * n - 1);
      detail::over_minus(t, x, 2 * n);
      detail::over_minus(t, xi, 2 * n);
    }
    detail::check_term_bound(t, n * n, "R2", n);
    sum += t;
  }
  return sum;
}

/// Ubar(x;q) = sum_{n>=1} (-xq, -x^{-1}q; q)_{n-1} q^n / (-q;q)_n.
/// Term bound: n.
template <class R>
Series<R> build_Ubar(const R& x, int order) {
  using T = RingTraits<R>;
  const R xi = T::inverse(x);
  const R m1 = R(-T::one());
  Series<R> sum(order), t = Series<R>::monomial(T::one(), 1, order);
  if (order >= 1) detail::over_minus(t, m1, 1);
  for (int n = 1; n <= order; ++n) {
    detail::check_term_bound(t, n, "Ubar", n);
    sum += t;
    detail::times_plus(t, x, n);
    detail::times_plus(t, xi, n);
    t = shift_q(t, 1);
    detail::over_minus(t, m1, n + 1);
  }
  return sum;
}

/// Ubar2(x;q) = sum_{n>=1} (-xq^2, -x^{-1}q^2; q^2)_{n-1} q^{2n} / (-q;q)_{2n}.
/// Term bound: 2n.
template <class R>
Series<R> build_Ubar2(const R& x, int order) {
  using T = RingTraits<R>;
  const R xi = T::inverse(x);
  const R m1 = R(-T::one());
  Series<R> sum(order), t = Series<R>::monomial(T::one(), 2, order);
  detail::over_minus(t, m1, 1);
  detail::over_minus(t, m1, 2);
  for (int n = 1; 2 * n <= order; ++n) {
    detail::check_term_bound(t, 2 * n, "Ubar2", n);
    sum += t;
    detail::times_plus(t, x, 2 * n);
    detail::times_plus(t, xi, 2 * n);
    t = shift_q(t, 2);
    detail::over_minus(t, m1, 2 * n + 1);
    detail::over_minus(t, m1, 2 * n + 2);
  }
  return sum;
}

/// U2(x;q) = sum_{n>=1} (-xq^2, -x^{-1}q^2; q^2)_{n-1} q^{2n} / (-q;q^2)_n.
/// Term bound: 2n.
template <class R>
Series<R> build_U2(const R& x, int order) {
  using T = RingTraits<R>;
  const R xi = T::inverse(x);
  const R m1 = R(-T::one());
  Series<R> sum(order), t = Series<R>::monomial(T::one(), 2, order);
  detail::over_minus(t, m1, 1);
  for (int n = 1; 2 * n <= order; ++n) {
    detail::check_term_bound(t, 2 * n, "U2", n);
    sum += t;
    detail::times_plus(t, x, 2 * n);
    detail::times_plus(t, xi, 2 * n);
    t = shift_q(t, 2);
    detail::over_minus(t, m1, 2 * n + 1);
  }
  return sum;
}

/// 1/(q;q)_inf.
template <class R>
Series<R> build_P(int order) {
  return invert(pochhammer<R>({RingTraits<R>::one(), 1}, kInfinity, order));
}

}  // namespace unimodal
