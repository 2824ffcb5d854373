#pragma once

// Arithmetic on truncated Laurent series q^v * body, tracking the absolute
// precision: a product is known to relative order min(o_a, o_b), a sum
// through the smaller absolute precision.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "unimodal/qproduct.hpp"

namespace unimodal {

/// Moves leading zero coefficients into the valuation.
template <class R>
Laurent<R> trimmed(const Laurent<R>& a) {
  const int v = a.body.valuation();
  if (v == 0 || v > a.body.order()) return a;
  std::vector<R> c(a.body.coeffs().begin() + v, a.body.coeffs().end());
  return {a.valuation + v, Series<R>(std::move(c), a.body.order() - v)};
}

template <class R>
bool is_zero(const Laurent<R>& a) {
  return a.body.is_zero();
}

template <class R>
Laurent<R> operator*(const Laurent<R>& a, const Laurent<R>& b) {
  const Laurent<R> x = trimmed(a), y = trimmed(b);
  if (is_zero(x)) return {x.valuation + y.valuation, Series<R>(x.body.order())};
  if (is_zero(y)) return {x.valuation + y.valuation, Series<R>(y.body.order())};
  const int order = std::min(x.body.order(), y.body.order());
  return {x.valuation + y.valuation, mul_truncated(x.body, y.body, order)};
}

template <class R>
Laurent<R> operator*(Laurent<R> a, const R& c) {
  a.body *= c;
  return a;
}

template <class R>
Laurent<R> operator+(const Laurent<R>& a, const Laurent<R>& b) {
  const int lo = std::min(a.valuation, b.valuation);
  const int hi = std::min(a.precision(), b.precision());
  if (hi < lo) throw Error(ErrorKind::order_mismatch, "Laurent sum has no known coefficients");
  Laurent<R> r{lo, Series<R>(hi - lo)};
  for (int e = lo; e <= hi; ++e) {
    R c = RingTraits<R>::zero();
    if (e >= a.valuation) c += a.body[e - a.valuation];
    if (e >= b.valuation) c += b.body[e - b.valuation];
    r.body[e - lo] = std::move(c);
  }
  return r;
}

template <class R>
Laurent<R> operator-(Laurent<R> a) {
  for (int n = 0; n <= a.body.order(); ++n) a.body[n] = R(-a.body[n]);
  return a;
}

template <class R>
Laurent<R> operator-(const Laurent<R>& a, const Laurent<R>& b) {
  return a + (-b);
}

template <class R>
Laurent<R> shifted(Laurent<R> a, int k) {
  a.valuation += k;
  return a;
}

/// Requires a unit leading coefficient.
template <class R>
Laurent<R> inverse(const Laurent<R>& a) {
  const Laurent<R> x = trimmed(a);
  if (is_zero(x)) throw Error(ErrorKind::not_invertible, "inverse of a Laurent series with no known term");
  return {-x.valuation, invert(x.body)};
}

template <class R>
Laurent<R> laurent_from(const Series<R>& s) {
  return {0, s};
}

/// Truncates (or checks) to absolute precision `top`.
template <class R>
Laurent<R> through(const Laurent<R>& a, int top) {
  if (a.precision() < top)
    throw Error(ErrorKind::order_mismatch, "known through q^" + std::to_string(a.precision()) + ", need q^" +
                                               std::to_string(top));
  if (top < a.valuation) return {top + 1, Series<R>(0)};
  return {a.valuation, a.body.truncated(top - a.valuation)};
}

/// Accumulates Laurent terms through q^top, extending downwards as needed.
template <class R>
class LaurentAccumulator {
 public:
  explicit LaurentAccumulator(int top) : top_(top), lo_(top + 1) {}

  void add(const Laurent<R>& t) {
    if (t.precision() < top_)
      throw Error(ErrorKind::order_mismatch, "term known through q^" + std::to_string(t.precision()) +
                                                 " only, need q^" + std::to_string(top_));
    for (int k = 0; k <= t.body.order(); ++k) {
      const int e = t.valuation + k;
      if (e > top_) break;
      if (RingTraits<R>::is_zero(t.body[k])) continue;
      if (e < lo_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(lo_ - e), RingTraits<R>::zero());
        lo_ = e;
      }
      coeffs_[static_cast<std::size_t>(e - lo_)] += t.body[k];
    }
  }

  Laurent<R> result() const {
    if (coeffs_.empty()) return {0, Series<R>(std::max(top_, 0))};
    return {lo_, Series<R>(std::vector<R>(coeffs_.begin(), coeffs_.end()), top_ - lo_)};
  }

 private:
  int top_;
  int lo_;
  std::vector<R> coeffs_;
};

/// Sums term(n) for n = n0, n0 + 1, ... through q^top. `bound(n)` is a
/// lower bound for the q-order of term(n), nondecreasing from n_stable on;
/// the sum stops at the first n >= n_stable with bound(n) > top. Each term's
/// actual order is checked against the bound, and bounds that have not grown
/// 64 terms past n_stable are reported as divergence.
template <class R, class Term, class Bound>
Laurent<R> series_sum(int n0, int n_stable, int top, Term&& term, Bound&& bound, std::string_view what) {
  LaurentAccumulator<R> acc(top);
  int stable_bound = 0;
  for (int n = n0;; ++n) {
    const int b = bound(n);
    if (n >= n_stable && b > top) break;
    if (n == std::max(n0, n_stable)) stable_bound = b;
    if (n >= std::max(n0, n_stable) + 64 && b <= stable_bound)
      throw Error(ErrorKind::divergent_spec, std::string(what) + ": term orders stop growing");
    if (b > top) continue;
    Laurent<R> t = term(n);
    const Laurent<R> tt = trimmed(t);
    if (!is_zero(tt) && tt.valuation < b)
      throw Error(ErrorKind::domain, std::string(what) + ": term " + std::to_string(n) + " has q-order " +
                                         std::to_string(tt.valuation) + " below its bound " + std::to_string(b));
    acc.add(t);
    if (n > n0 + 100000) throw Error(ErrorKind::divergent_spec, std::string(what) + ": summation does not terminate");
  }
  return acc.result();
}

}  // namespace unimodal
