#pragma once

// Test-side oracles. Nothing here calls into the library's series code:
// counts come from naive recursion and direct term-by-term summation over
// rational numbers.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle {

/// Number of partitions of n with all parts <= max_part, by plain recursion.
inline std::int64_t partitions_bounded(int n, int max_part) {
  if (n == 0) return 1;
  if (max_part == 0) return 0;
  std::int64_t total = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) total += partitions_bounded(n - k, k);
  return total;
}

inline std::int64_t partitions(int n) { return partitions_bounded(n, n); }

/// Visits every partition of n as a weakly decreasing vector.
inline void each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      f(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
}

/// Counts strongly unimodal sequences of size n by rank: map rank -> count.
inline std::map<int, std::int64_t> strongly_unimodal_by_rank(int n) {
  std::map<int, std::int64_t> out;
  // peak p, left strict increasing set below p, right strict decreasing set below p.
  std::function<void(int, int, int, int)> right = [&](int rest, int below, int left_len, int right_len) {
    if (rest == 0) {
      ++out[right_len - left_len];
      return;
    }
    for (int k = std::min(rest, below - 1); k >= 1; --k) right(rest - k, k, left_len, right_len + 1);
  };
  std::function<void(int, int, int, int)> left = [&](int rest, int below, int peak, int left_len) {
    right(rest, peak, left_len, 0);
    for (int k = std::min(rest, below - 1); k >= 1; --k) left(rest - k, k, peak, left_len + 1);
  };
  for (int p = 1; p <= n; ++p) left(n - p, p, p, 0);
  return out;
}

/// Dense power series c[0] + c[1] q + ... through q^top over the rationals.
struct DenseSeries {
  std::vector<mpq_class> c;
  explicit DenseSeries(int top, mpq_class constant = 0) : c(static_cast<std::size_t>(top + 1)) { c[0] = constant; }
  int top() const { return static_cast<int>(c.size()) - 1; }

  // times (1 - a q^e), e >= 0
  void times_binomial(const mpq_class& a, int e) {
    for (int n = top(); n >= 0; --n)
      if (n - e >= 0) c[n] -= a * c[n - e];
  }
  // divided by (1 - a q^e), e >= 1: geometric series, term by term
  void over_binomial(const mpq_class& a, int e) {
    for (int n = e; n <= top(); ++n) c[n] += a * c[n - e];
  }
  void times_monomial(const mpq_class& a, int e) {
    std::vector<mpq_class> r(c.size());
    for (int n = 0; n + e <= top(); ++n)
      if (n + e >= 0) r[n + e] = a * c[n];
    c = std::move(r);
  }
  void add(const DenseSeries& o) {
    for (int n = 0; n <= top(); ++n) c[n] += o.c[n];
  }
};

struct Param {
  mpq_class coeff;
  int exp;
};

inline mpq_class qpow_coeff(const mpq_class& a, int n) {
  mpq_class r = 1;
  for (int i = 0; i < n; ++i) r *= a;
  return r;
}

/// Both sides of Heine's transformation for parameters of positive q-order
/// (base q), each summed term by term until the term order passes top.
inline std::pair<DenseSeries, DenseSeries> heine_direct(Param a, Param b, Param c, Param t, int top) {
  DenseSeries lhs(top), rhs_sum(top);
  for (int n = 0; n * t.exp <= top; ++n) {
    DenseSeries term(top, qpow_coeff(t.coeff, n));
    term.times_monomial(1, n * t.exp);
    for (int j = 0; j < n; ++j) {
      term.times_binomial(a.coeff, a.exp + j);
      term.times_binomial(b.coeff, b.exp + j);
      term.over_binomial(c.coeff, c.exp + j);
      term.over_binomial(1, 1 + j);
    }
    lhs.add(term);
  }
  const Param cb{c.coeff / b.coeff, c.exp - b.exp}, at{a.coeff * t.coeff, a.exp + t.exp};
  for (int n = 0; n * b.exp <= top; ++n) {
    DenseSeries term(top, qpow_coeff(b.coeff, n));
    term.times_monomial(1, n * b.exp);
    for (int j = 0; j < n; ++j) {
      term.times_binomial(cb.coeff, cb.exp + j);
      term.times_binomial(t.coeff, t.exp + j);
      term.over_binomial(at.coeff, at.exp + j);
      term.over_binomial(1, 1 + j);
    }
    rhs_sum.add(term);
  }
  for (int j = 0; j <= top; ++j) {
    rhs_sum.times_binomial(b.coeff, b.exp + j);
    rhs_sum.times_binomial(at.coeff, at.exp + j);
    rhs_sum.over_binomial(c.coeff, c.exp + j);
    rhs_sum.over_binomial(t.coeff, t.exp + j);
  }
  return {lhs, rhs_sum};
}

}  // namespace oracle
