#include <cmath>
#include <vector>

#include "doctest.h"
#include "unimodal/asymptotics.hpp"

using namespace unimodal;

namespace {

// Euler's pentagonal recurrence, independent of the series code.
std::vector<BigInt> partitions_pentagonal(int n) {
  std::vector<BigInt> p(n + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const int sign = k % 2 ? 1 : -1;
      s += sign * p[m - g1];
      if (g2 <= m) s += sign * p[m - g2];
    }
    p[m] = s;
  }
  return p;
}

}  // namespace

TEST_CASE("exact counts") {
  const auto p = exact_counts(GrowthTarget::p, 300);
  const auto oracle = partitions_pentagonal(300);
  for (int n = 0; n <= 300; ++n) CHECK(p[n] == oracle[n]);
  CHECK(exact_counts(GrowthTarget::u2bar, 10)[7] == 5);
  CHECK(exact_counts(GrowthTarget::u2, 10)[6] == 5);
  // Strongly unimodal sequences of size 1..5: 1, 1, 3, 4, 6.
  const auto u = exact_counts(GrowthTarget::u, 5);
  const long us[] = {0, 1, 1, 3, 4, 6};
  for (int n = 0; n <= 5; ++n) CHECK(u[n] == us[n]);
  CHECK_THROWS_AS((void)exact_counts(GrowthTarget::p, kCountGuard + 1), Error);
  CHECK_THROWS_AS((void)parse_growth_target("v"), Error);
  CHECK(parse_growth_target("u2bar") == GrowthTarget::u2bar);
}

TEST_CASE("log of big integers") {
  CHECK(log_big(BigInt(1)) == doctest::Approx(0.0));
  CHECK(log_big(BigInt(1000)) == doctest::Approx(std::log(1000.0)));
  BigInt big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  CHECK(log_big(big) == doctest::Approx(400 * std::log(10.0)));
  CHECK_THROWS_AS((void)log_big(BigInt(0)), Error);
}

TEST_CASE("main terms") {
  // p(100) = 190569292; the main term is about 1.05 times that.
  const double r = 190569292.0 / std::exp(log_main_term(GrowthTarget::p, 100));
  CHECK(r > 0.9);
  CHECK(r < 1.0);
  const auto rep = ratio_report(GrowthTarget::p, {1000});
  CHECK(rep.rows[0].ratio > 0.5);
  CHECK(rep.rows[0].ratio < 1.5);
}

TEST_CASE("ratio trends toward one") {
  for (auto t : {GrowthTarget::u2bar, GrowthTarget::u2}) {
    INFO(to_string(t));
    const auto rep = ratio_report(t, {500, 1000, 2000});
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.deviation_decreasing);
    CHECK(rep.rows[2].deviation < rep.rows[0].deviation);
    CHECK(rep.log_main_within_2pct);
    // log(count)/exponent is still about 0.92 at n = 2000: the polynomial
    // factor in the main term is not negligible yet.
    CHECK(rep.rows[2].log_ratio > 0.9);
    CHECK(rep.rows[2].log_ratio < 0.95);
  }
  CHECK_THROWS_AS((void)ratio_report(GrowthTarget::p, {10}, exact_counts(GrowthTarget::p, 5)), Error);
}

TEST_CASE("monotonicity and the F-group") {
  CHECK_FALSE(monotonicity_check(GrowthTarget::u2bar, 2000).has_value());
  CHECK_FALSE(monotonicity_check(GrowthTarget::u2, 2000).has_value());
  CHECK_FALSE(first_negative(one_minus_q_ubar2(2000)).has_value());
  CHECK_FALSE(first_negative(f_group(2000)).has_value());
  // F_1 and F_2 alone have negative coefficients.
  CHECK(first_negative(f_term(1, 50)).has_value());
  CHECK(first_negative(f_term(2, 50)).has_value());
  for (int k = 3; k <= 8; ++k) CHECK_FALSE(first_negative(f_term(k, 300)).has_value());
  // The F_k add up to (1 - q) Ubar2(1;-q).
  const int n = 120;
  Series<BigInt> s(n);
  for (int k = 1; 2 * k <= n; ++k) s += f_term(k, n);
  CHECK(s == one_minus_q_ubar2(n));
  const auto [f13, f24] = f_group_closed_forms(400);
  CHECK(f13 == f_term(1, 400) + f_term(3, 400));
  CHECK(f24 == f_term(2, 400) + f_term(4, 400));
  Series<BigInt> decreasing(3);
  decreasing[0] = 2;
  decreasing[1] = 1;
  CHECK(first_decrease(decreasing) == 0);
}

TEST_CASE("eta asymptotic probe and limit sums") {
  const auto rows = eta_asymptotic_probe({0.5, 0.25, 0.125});
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::abs(rows[i].ratio - 1) < std::abs(rows[i - 1].ratio - 1));
  CHECK(std::abs(rows[2].ratio - 1) < 0.01);
  // Euler's product at w = log 2 is (1/2;1/2)_inf = 0.288788...
  const auto exact = eta_asymptotic_probe({std::log(2.0)});
  CHECK(std::exp(exact[0].log_product) == doctest::Approx(0.2887880950866).epsilon(1e-12));
  CHECK(std::abs(eta_asymptotic_probe({20.0})[0].ratio - 1) > 0.5);
  CHECK_THROWS_AS((void)eta_asymptotic_probe({0.0}), Error);

  const auto [a, b] = limit_sums(0.05);
  CHECK(std::abs(a - 0.5) < 0.05);
  CHECK(std::abs(b - 0.25) < 0.05);
  const auto [c, d] = limit_sums(0.01);
  CHECK(std::abs(c - 0.5) < std::abs(a - 0.5));
  CHECK(std::abs(d - 0.25) < std::abs(b - 0.25));
}
