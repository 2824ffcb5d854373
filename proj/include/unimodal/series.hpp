#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "unimodal/error.hpp"
#include "unimodal/rings.hpp"

namespace unimodal {

/// Truncated power series c_0 + c_1 q + ... + c_N q^N over R.
///
/// Coefficients past the order are unknown, never zero: every operation
/// returns a result that is exact through its own order.
template <class R>
class Series {
 public:
  using Traits = RingTraits<R>;

  Series() : Series(0) {}
  explicit Series(int order) : c_(check_order(order) + 1, Traits::zero()) {}
  Series(std::vector<R> coeffs, int order) : c_(std::move(coeffs)) {
    c_.resize(check_order(order) + 1, Traits::zero());
  }

  static Series one(int order) { return constant(Traits::one(), order); }
  static Series constant(const R& c, int order) {
    Series s(order);
    s.c_[0] = c;
    return s;
  }
  /// c q^e, which is the zero series when e exceeds the order.
  static Series monomial(const R& c, int e, int order) {
    if (e < 0) throw Error(ErrorKind::domain, "negative exponent in Series::monomial");
    Series s(order);
    if (e <= order) s.c_[e] = c;
    return s;
  }

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const noexcept { return c_; }
  const R& operator[](int n) const { return c_[n]; }
  R& operator[](int n) { return c_[n]; }

  const R& coefficient(int n) const {
    if (n < 0 || n > order())
      throw Error(ErrorKind::out_of_range, "coefficient q^" + std::to_string(n) +
                                               " beyond truncation order " + std::to_string(order()));
    return c_[n];
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const R& x) { return Traits::is_zero(x); });
  }
  /// Index of the first non-zero coefficient, or order()+1 for the zero series.
  int valuation() const {
    for (int n = 0; n <= order(); ++n)
      if (!Traits::is_zero(c_[n])) return n;
    return order() + 1;
  }

  Series truncated(int m) const {
    if (m > order()) throw Error(ErrorKind::order_mismatch, "cannot extend a truncated series");
    return Series(std::vector<R>(c_.begin(), c_.begin() + m + 1), m);
  }

  Series& operator+=(const Series& o) {
    require_same(o);
    for (int n = 0; n <= order(); ++n) c_[n] += o.c_[n];
    return *this;
  }
  Series& operator-=(const Series& o) {
    require_same(o);
    for (int n = 0; n <= order(); ++n) c_[n] -= o.c_[n];
    return *this;
  }
  Series& operator*=(const R& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  Series& operator*=(const Series& o) {
    *this = *this * o;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Series operator*(Series a, const R& s) { return a *= s; }
  friend Series operator*(const R& s, Series a) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b) {
    a.require_same(b);
    return mul_truncated(a, b, a.order());
  }
  friend bool operator==(const Series& a, const Series& b) = default;

  /// Cauchy product computed only through q^m (m at most both orders).
  friend Series mul_truncated(const Series& a, const Series& b, int m) {
    m = std::min({m, a.order(), b.order()});
    Series r(m);
    for (int i = 0; i <= m; ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= m; ++j) {
        if (Traits::is_zero(b.c_[j])) continue;
        Traits::add_mul(r.c_[i + j], a.c_[i], b.c_[j]);
      }
    }
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= order(); ++n) {
      if (Traits::is_zero(c_[n])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << Traits::to_string(c_[n]) << ")";
      if (n > 0) os << "*q^" << n;
    }
    if (first) os << "0";
    os << " + O(q^" << order() + 1 << ")";
    return os.str();
  }

 private:
  static std::size_t check_order(int order) {
    if (order < 0) throw Error(ErrorKind::domain, "negative truncation order");
    return static_cast<std::size_t>(order);
  }
  void require_same(const Series& o) const {
    if (o.order() != order())
      throw Error(ErrorKind::order_mismatch,
                  "orders " + std::to_string(order()) + " and " + std::to_string(o.order()));
  }

  std::vector<R> c_;
};

/// Exact product; throws order-mismatch on unequal orders.
template <class R>
Series<R> mul(const Series<R>& f, const Series<R>& g) {
  return f * g;
}

/// Multiplicative inverse; the constant term must be a unit.
template <class R>
Series<R> invert(const Series<R>& f) {
  using T = RingTraits<R>;
  if (!T::is_unit(f[0]))
    throw Error(ErrorKind::not_invertible, "constant term " + T::to_string(f[0]) + " is not a unit");
  const R c0inv = T::inverse(f[0]);
  const int n_max = f.order();
  Series<R> g(n_max);
  g[0] = c0inv;
  for (int n = 1; n <= n_max; ++n) {
    R acc = T::zero();
    for (int j = 1; j <= n; ++j)
      if (!T::is_zero(f[j])) T::add_mul(acc, f[j], g[n - j]);
    g[n] = -(acc * c0inv);
  }
  return g;
}

/// f(q) -> f(-q).
template <class R>
Series<R> negate_q(Series<R> f) {
  for (int n = 1; n <= f.order(); n += 2) f[n] = -f[n];
  return f;
}

/// f(q) -> f(q^k). An order-N input determines the output through
/// q^{k(N+1)-1}, which is the order returned; to get order M from this, feed
/// an input of order floor(M/k).
template <class R>
Series<R> substitute_q_power(const Series<R>& f, int k) {
  if (k <= 0) throw Error(ErrorKind::domain, "substitution power must be positive");
  Series<R> r(k * (f.order() + 1) - 1);
  for (int i = 0; i <= f.order(); ++i) r[i * k] = f[i];
  return r;
}

/// f * q^k for k >= 0, same order.
template <class R>
Series<R> shift_q(const Series<R>& f, int k) {
  if (k < 0) throw Error(ErrorKind::domain, "negative shift");
  Series<R> r(f.order());
  for (int n = f.order(); n >= k; --n) r[n] = f[n - k];
  return r;
}

/// f <- f * (alpha + beta q^k), k >= 0.
template <class R>
void mul_binomial(Series<R>& f, const R& alpha, const R& beta, int k) {
  using T = RingTraits<R>;
  if (k == 0) {
    f *= R(alpha + beta);
    return;
  }
  const bool alpha_one = alpha == T::one();
  for (int n = f.order(); n >= 0; --n) {
    if (!alpha_one) f[n] *= alpha;
    if (n >= k && !T::is_zero(f[n - k])) T::add_mul(f[n], beta, f[n - k]);
  }
}

/// f <- f / (alpha + beta q^k); alpha must be a unit (alpha + beta when k = 0).
template <class R>
void div_binomial(Series<R>& f, const R& alpha, const R& beta, int k) {
  using T = RingTraits<R>;
  if (k == 0) {
    const R s = alpha + beta;
    if (!T::is_unit(s))
      throw Error(ErrorKind::not_invertible, "scalar factor " + T::to_string(s) + " is not a unit");
    f *= T::inverse(s);
    return;
  }
  if (!T::is_unit(alpha))
    throw Error(ErrorKind::not_invertible, "binomial constant " + T::to_string(alpha) + " is not a unit");
  const bool alpha_one = alpha == T::one();
  const R ainv = T::inverse(alpha);
  const R nb = -beta;
  for (int n = 0; n <= f.order(); ++n) {
    if (n >= k && !T::is_zero(f[n - k])) T::add_mul(f[n], nb, f[n - k]);
    if (!alpha_one) f[n] *= ainv;
  }
}

/// Coefficient of zeta^m q^n.
inline BigInt zeta_coefficient(const Series<ZetaLaurent>& f, int m, int n) {
  return f.coefficient(n).coefficient(m);
}

/// Applies zeta -> 1 termwise.
inline Series<BigInt> at_zeta_one(const Series<ZetaLaurent>& f) {
  Series<BigInt> r(f.order());
  for (int n = 0; n <= f.order(); ++n) r[n] = f[n].at_one();
  return r;
}

/// Applies zeta -> zeta^{-1} termwise.
inline Series<ZetaLaurent> conjugate_zeta(const Series<ZetaLaurent>& f) {
  Series<ZetaLaurent> r(f.order());
  for (int n = 0; n <= f.order(); ++n) r[n] = f[n].conjugate();
  return r;
}

template <class R, class S>
Series<S> map_coefficients(const Series<R>& f) {
  Series<S> r(f.order());
  for (int n = 0; n <= f.order(); ++n) r[n] = S(f[n]);
  return r;
}

}  // namespace unimodal
