#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unimodal/series.hpp"

namespace unimodal {

enum class GrowthTarget { p, u, u2bar, u2 };

/// "p", "u", "u2bar", "u2"; anything else is a domain error.
GrowthTarget parse_growth_target(std::string_view name);
std::string to_string(GrowthTarget t);

inline constexpr int kCountGuard = 5000;

/// Exact coefficients through q^n: p(n), u(n), ubar2(n) = [q^n] Ubar2(1;-q),
/// u2(n) = [q^n] U2(1;-q). n above kCountGuard raises size-limit.
Series<BigInt> exact_counts(GrowthTarget t, int n);

/// Natural log of the closed-form main term at n (n >= 1):
///   p:     e^{pi sqrt(2n/3)} / (4 sqrt3 n)
///   u:     e^{pi sqrt(2n/3)} / (8 6^{1/4} n^{3/4})
///   u2bar: e^{pi sqrt(n/2)} / (8 (2n)^{3/4})
///   u2:    e^{pi sqrt(2n/3)} / (4 sqrt3 (6n)^{3/4})
double log_main_term(GrowthTarget t, int n);

/// The exponent alone: pi sqrt(n/2) for u2bar, pi sqrt(2n/3) otherwise.
double growth_exponent(GrowthTarget t, int n);

/// log of a positive big integer without overflow.
double log_big(const BigInt& x);

struct RatioRow {
  int n = 0;
  double log_count = 0;
  double log_main = 0;
  double ratio = 0;      // count / main term
  double deviation = 0;  // |ratio - 1|
  double log_ratio = 0;  // log(count) / exponent
};

struct RatioReport {
  GrowthTarget target = GrowthTarget::p;
  std::vector<RatioRow> rows;
  /// |ratio - 1| strictly decreases along the checkpoints.
  bool deviation_decreasing = false;
  /// log(count)/exponent at the last checkpoint lies in [0.98, 1.02].
  bool log_ratio_within_2pct = false;
  /// log(count)/log(main term) at the last checkpoint lies in [0.98, 1.02].
  bool log_main_within_2pct = false;
};

RatioReport ratio_report(GrowthTarget t, const std::vector<int>& checkpoints, const Series<BigInt>& counts);
RatioReport ratio_report(GrowthTarget t, const std::vector<int>& checkpoints);

/// First n < counts.order() with counts[n+1] < counts[n].
std::optional<int> first_decrease(const Series<BigInt>& counts);
std::optional<int> monotonicity_check(GrowthTarget t, int n);

/// First index with a negative coefficient.
std::optional<int> first_negative(const Series<BigInt>& s);

/// (1 - q) Ubar2(1;-q) through q^n.
Series<BigInt> one_minus_q_ubar2(int n);

/// F_k(q) = (-q^2;q^2)_{k-1} q^{2k} / ((1 + q^{2k}) (q^3;q^2)_{k-1}) through q^n;
/// the F_k sum to (1 - q) Ubar2(1;-q).
Series<BigInt> f_term(int k, int n);
/// F_1 + F_2 + F_3 + F_4 through q^n.
Series<BigInt> f_group(int n);
/// The grouped rational forms of F_1 + F_3 and F_2 + F_4 through q^n.
std::pair<Series<BigInt>, Series<BigInt>> f_group_closed_forms(int n);

struct EtaProbeRow {
  double w = 0;
  double log_product = 0;     // log (e^{-w}; e^{-w})_inf
  double log_asymptotic = 0;  // log( sqrt(2 pi / w) e^{-pi^2/(6w)} )
  double ratio = 0;
  int factors = 0;            // factors used before the tail fell below 1e-18
};

/// Evaluates the product with a tail bound; w must be positive.
std::vector<EtaProbeRow> eta_asymptotic_probe(const std::vector<double>& ws);

/// The two sums from the Ubar2(1;-q) asymptotic argument at q = e^{-w}:
///   sum (q^2;q^2)_n (-1)^n q^n / (-q;q^2)_{n+1}    (tends to 1/2)
///   sum (q^2;q^4)_n (-1)^n q^{2n} / (-q;q^2)_{n+1}^2  (tends to 1/4)
std::pair<double, double> limit_sums(double w);

}  // namespace unimodal
