#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "unimodal/series.hpp"

namespace unimodal {

/// c q^e with c in R.
template <class R>
struct Monomial {
  R coeff = RingTraits<R>::one();
  int q_exp = 0;

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {R(a.coeff * b.coeff), a.q_exp + b.q_exp};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

template <class R>
Monomial<R> mono(const R& c, int e = 0) {
  return {c, e};
}

/// Laurent series in q: q^valuation * body. Known through
/// q^{valuation + body.order()}.
template <class R>
struct Laurent {
  int valuation = 0;
  Series<R> body;

  int precision() const { return valuation + body.order(); }
  /// Coefficient of q^n (zero below the valuation).
  R coefficient(int n) const {
    if (n > precision()) throw Error(ErrorKind::out_of_range, "Laurent coefficient beyond precision");
    if (n < valuation) return RingTraits<R>::zero();
    return body[n - valuation];
  }
  /// Re-expressed as an ordinary series through q^m; requires no terms below q^0.
  Series<R> to_series(int m) const {
    if (m > precision()) throw Error(ErrorKind::order_mismatch, "Laurent precision too low");
    Series<R> r(m);
    for (int n = 0; n <= body.order(); ++n) {
      const int e = valuation + n;
      if (RingTraits<R>::is_zero(body[n])) continue;
      if (e < 0) throw Error(ErrorKind::domain, "negative q-power in Laurent::to_series");
      if (e <= m) r[e] = body[n];
    }
    return r;
  }
};

/// Compares two Laurent series through the smaller precision; returns the
/// first differing exponent.
template <class R>
std::optional<int> first_difference(const Laurent<R>& a, const Laurent<R>& b) {
  const int lo = std::min(a.valuation, b.valuation);
  const int hi = std::min(a.precision(), b.precision());
  for (int n = lo; n <= hi; ++n)
    if (!(a.coefficient(n) == b.coefficient(n))) return n;
  return std::nullopt;
}

inline constexpr int kInfinity = INT_MAX;

/// (a; base)_n, or its reciprocal. Factor j is 1 - a*base^j. A negative n
/// means 1 / prod_{j=n}^{-1} (1 - a base^j), so a reciprocal group with
/// negative n is a finite numerator product.
template <class R>
struct PochGroup {
  Monomial<R> a;
  Monomial<R> base;
  int n = 0;
  bool reciprocal = false;
};

/// scalar * q^shift * product of Pochhammer groups, expanded lazily.
template <class R>
class QProduct {
 public:
  using T = RingTraits<R>;

  QProduct() = default;
  explicit QProduct(const R& scalar, int shift = 0) : scalar_(scalar), shift_(shift) {}

  QProduct& times(const Monomial<R>& a, const Monomial<R>& base, int n) {
    groups_.push_back({a, base, n, false});
    return *this;
  }
  QProduct& over(const Monomial<R>& a, const Monomial<R>& base, int n) {
    groups_.push_back({a, base, n, true});
    return *this;
  }
  /// Shorthand with base q^step.
  QProduct& times(const R& c, int e, int step, int n) { return times({c, e}, {T::one(), step}, n); }
  QProduct& over(const R& c, int e, int step, int n) { return over({c, e}, {T::one(), step}, n); }
  QProduct& times_q(int k) {
    shift_ += k;
    return *this;
  }
  QProduct& scale(const R& c) {
    scalar_ *= c;
    return *this;
  }
  QProduct& append(const QProduct& o) {
    scalar_ *= o.scalar_;
    shift_ += o.shift_;
    groups_.insert(groups_.end(), o.groups_.begin(), o.groups_.end());
    return *this;
  }

  /// Expands through q^precision. When `clearing` is given the result is
  /// clearing * product and non-unit scalar denominators are divided out of
  /// it exactly; without it they raise not-invertible.
  Laurent<R> expand(int precision, const R* clearing = nullptr) const {
    struct Factor {
      R c;
      int e;
      bool num;
    };
    std::vector<Factor> finite;
    std::vector<const PochGroup<R>*> infinite;
    int v = shift_;
    auto add = [&](const R& c, int e, bool num) {
      if (T::is_zero(c)) return;
      if (e < 0) v += num ? e : -e;
      finite.push_back({c, e, num});
    };
    for (const auto& g : groups_) {
      if (g.n == kInfinity) {
        if (g.base.q_exp <= 0)
          throw Error(ErrorKind::divergent_spec, "infinite Pochhammer needs a base with positive q-order");
        R c = g.a.coeff;
        int e = g.a.q_exp;
        for (; e <= 0; e += g.base.q_exp) {
          add(c, e, !g.reciprocal);
          c *= g.base.coeff;
        }
        infinite.push_back(&g);
      } else if (g.n >= 0) {
        R c = g.a.coeff;
        int e = g.a.q_exp;
        for (int j = 0; j < g.n; ++j) {
          add(c, e, !g.reciprocal);
          c *= g.base.coeff;
          e += g.base.q_exp;
        }
      } else {
        const R binv = T::inverse(g.base.coeff);
        R c = g.a.coeff;
        int e = g.a.q_exp;
        for (int j = -1; j >= g.n; --j) {
          c *= binv;
          e -= g.base.q_exp;
          add(c, e, g.reciprocal);
        }
      }
    }
    // Cancel equal numerator/denominator factors of non-positive q-order,
    // so that e.g. (a;q)_{-n} (a;q)_n needs no non-unit inverse.
    std::vector<bool> dead(finite.size(), false);
    for (std::size_t i = 0; i < finite.size(); ++i) {
      if (!finite[i].num || finite[i].e > 0) continue;
      for (std::size_t j = 0; j < finite.size(); ++j) {
        if (dead[j] || finite[j].num || finite[j].e != finite[i].e || !(finite[j].c == finite[i].c)) continue;
        dead[i] = dead[j] = true;
        break;
      }
    }
    const int m = precision - v;
    if (m < 0) return {precision, Series<R>(0)};
    Series<R> body = Series<R>::constant(scalar_, m);
    std::optional<R> clear;
    if (clearing) clear = *clearing;
    const R one = T::one();
    auto apply = [&](const R& c, int e, bool num) {
      if (e > 0) {
        if (e > m) return;
        if (num) mul_binomial(body, one, R(-c), e);
        else div_binomial(body, one, R(-c), e);
      } else if (e == 0) {
        R s = one - c;
        if (num) {
          body *= s;
        } else if (T::is_zero(s)) {
          throw Error(ErrorKind::singular_pochhammer, "factor 1 - (" + T::to_string(c) + ") vanishes");
        } else if (T::is_unit(s)) {
          body *= T::inverse(s);
        } else {
          std::optional<R> reduced;
          if (clear) reduced = T::exact_div(*clear, s);
          if (!reduced)
            throw Error(ErrorKind::not_invertible, "scalar denominator " + T::to_string(s));
          clear = std::move(*reduced);
        }
      } else {
        // 1 - c q^e = q^e (q^{-e} - c); the q^e is already in v.
        if (num) mul_binomial(body, R(-c), one, -e);
        else div_binomial(body, R(-c), one, -e);
      }
    };
    for (std::size_t i = 0; i < finite.size(); ++i)
      if (!dead[i]) apply(finite[i].c, finite[i].e, finite[i].num);
    for (const auto* g : infinite) {
      R c = g->a.coeff;
      int e = g->a.q_exp;
      while (e <= 0) {
        c *= g->base.coeff;
        e += g->base.q_exp;
      }
      for (; e <= m; e += g->base.q_exp) {
        if (!T::is_zero(c)) apply(c, e, !g->reciprocal);
        c *= g->base.coeff;
      }
    }
    if (clear) body *= *clear;
    return {v, std::move(body)};
  }

  /// The q-power at which expand() starts its body (before cancellation of
  /// zero factors), i.e. shift plus the negative-order factor exponents.
  int valuation() const {
    int v = shift_;
    auto neg = [&](const R& c, int e, bool num) {
      if (!T::is_zero(c) && e < 0) v += num ? e : -e;
    };
    for (const auto& g : groups_) {
      R c = g.a.coeff;
      int e = g.a.q_exp;
      if (g.n == kInfinity && g.base.q_exp <= 0)
        throw Error(ErrorKind::divergent_spec, "infinite Pochhammer needs a base with positive q-order");
      if (g.n == kInfinity || g.n >= 0) {
        for (int j = 0; (g.n == kInfinity ? e <= 0 : j < g.n); ++j) {
          neg(c, e, !g.reciprocal);
          c *= g.base.coeff;
          e += g.base.q_exp;
        }
      } else {
        const R binv = T::inverse(g.base.coeff);
        for (int j = -1; j >= g.n; --j) {
          c *= binv;
          e -= g.base.q_exp;
          neg(c, e, g.reciprocal);
        }
      }
    }
    return v;
  }

  /// Expansion as an ordinary series; throws when negative powers survive.
  Series<R> series(int order, const R* clearing = nullptr) const {
    return expand(order, clearing).to_series(order);
  }

 private:
  R scalar_ = T::one();
  int shift_ = 0;
  std::vector<PochGroup<R>> groups_;
};

/// (a; q^step)_n through q^order as a Laurent series.
template <class R>
Laurent<R> pochhammer_laurent(const Monomial<R>& a, int n, int order, int step = 1) {
  return QProduct<R>().times(a, {RingTraits<R>::one(), step}, n).expand(order);
}

/// (a; q^step)_n through q^order; n may be negative or kInfinity.
template <class R>
Series<R> pochhammer(const Monomial<R>& a, int n, int order, int step = 1) {
  return pochhammer_laurent(a, n, order, step).to_series(order);
}

}  // namespace unimodal
