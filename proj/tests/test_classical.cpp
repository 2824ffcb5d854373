#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "unimodal/bailey.hpp"
#include "unimodal/classical.hpp"

using namespace unimodal;

namespace {

using M = Monomial<Rational>;
using ZM = Monomial<ZetaLaurent>;

M m(Rational c, int e) { return {c, e}; }

const ZetaLaurent z = ZetaLaurent::monomial(1);
const ZetaLaurent zi = ZetaLaurent::monomial(-1);

template <class R>
void check_sides(const Sides<R>& s, int top) {
  REQUIRE(s.lhs.precision() >= top);
  REQUIRE(s.rhs.precision() >= top);
  const auto d = first_difference(through(s.lhs, top), through(s.rhs, top));
  CHECK_FALSE(d.has_value());
}

}  // namespace

TEST_CASE("Heine against term-by-term summation") {
  const int top = 30;
  auto [lhs, rhs] = oracle::heine_direct({1, 1}, {1, 2}, {1, 3}, {1, 2}, top);
  for (int n = 0; n <= top; ++n) CHECK(lhs.c[n] == rhs.c[n]);
  const auto s = heine_sides<Rational>({m(1, 1), m(1, 2), m(1, 3), m(1, 2)}, top);
  check_sides(s, top);
  for (int n = 0; n <= top; ++n) CHECK(s.lhs.coefficient(n) == lhs.c[n]);

  auto [l2, r2] = oracle::heine_direct({2, 1}, {Rational(1, 2), 1}, {3, 2}, {-1, 1}, top);
  const auto s2 = heine_sides<Rational>({m(2, 1), m(Rational(1, 2), 1), m(3, 2), m(-1, 1)}, top);
  for (int n = 0; n <= top; ++n) CHECK(s2.rhs.coefficient(n) == r2.c[n]);
}

TEST_CASE("Heine at rational specializations") {
  const std::vector<HeineParams<Rational>> specs = {
      {m(1, 1), m(1, 2), m(1, 3), m(1, 2)},
      {m(2, 1), m(Rational(1, 2), 1), m(3, 2), m(1, 1)},
      {m(3, 0), m(1, 1), m(-2, 1), m(1, 1)},
      {m(Rational(1, 3), 2), m(-1, 1), m(5, 1), m(2, 1)},
      {m(-2, 0), m(3, 2), m(1, 1), m(1, 2)},
      {m(2, 1), m(1, 1), m(-1, 1), m(1, 1), 2},
  };
  for (const auto& p : specs) check_sides(heine_sides(p, 30), 30);
}

TEST_CASE("Watson at rational specializations, with and without the limit") {
  const std::vector<WatsonParams<Rational>> specs = {
      {m(1, 2), m(2, 1), m(3, 1), m(1, 1), m(-1, 1)},
      {m(1, 1), m(Rational(1, 2), 1), m(2, 0), m(Rational(1, 2), 0), m(1, 1)},
      {m(3, 2), m(1, 1), m(1, 1), m(-1, 0), m(2, 1)},
      {m(1, 2), m(1, 1), m(-1, 1), m(1, 1), m(-2, 1), 2},
      {m(Rational(1, 2), 1), m(2, 0), m(3, 1), m(1, 1), m(1, 0)},
      {m(1, 2), m(-1, 1), std::nullopt, m(1, 1), m(-1, 1)},
      {m(1, 2), m(-1, 1), std::nullopt, m(2, 1), m(3, 1), 2},
  };
  for (const auto& p : specs) check_sides(watson_sides(p, 30), 30);
}

TEST_CASE("partial-theta transformation at rational specializations") {
  const std::vector<PartialThetaParams<Rational>> specs = {
      {m(1, 0), m(1, 1), m(2, 0), m(3, 0)},
      {m(2, 0), m(1, 1), m(Rational(1, 3), 0), m(1, 1)},
      {m(3, 0), m(2, 1), m(1, 1), m(-1, 0)},
      {m(-1, 1), m(1, 2), m(2, -2), m(-3, 2), 2},
      {m(Rational(1, 2), 0), m(1, 1), m(1, 1), m(1, 2)},
  };
  for (const auto& p : specs) check_sides(partial_theta_sides(p, 30), 30);
}

TEST_CASE("companion identity at rational specializations") {
  const std::vector<CompanionParams<Rational>> specs = {
      {m(1, 0), m(2, 0), m(3, 0)},
      {m(Rational(1, 2), 0), m(1, 1), m(1, 0)},
      {m(2, 0), m(3, 0), m(1, 1)},
      {m(1, 1), m(-1, 0), m(Rational(1, 2), 0)},
      {m(3, 0), m(Rational(1, 3), 0), m(-1, 1), 2},
  };
  for (const auto& p : specs) check_sides(companion_sides(p, 30), 30);
}

TEST_CASE("zeta specializations") {
  const int top = 30;
  check_sides(heine_sides<ZetaLaurent>({{z, 2}, {1, 2}, {-z, 3}, {-zi, 1}, 2}, top), top);
  check_sides(watson_sides<ZetaLaurent>({{1, 2}, {-1, 1}, std::nullopt, {-z, 1}, {-zi, 1}, 2}, top), top);
  check_sides(partial_theta_sides<ZetaLaurent>({{-1, 1}, {1, 2}, {zi, -2}, {-z, 2}, 2}, top), top);
  const ZetaLaurent clear = (ZetaLaurent(1) - z) * (ZetaLaurent(1) - zi);
  check_sides(companion_sides<ZetaLaurent>({{z, 0}, {zi, 0}, {1, 1}}, top, &clear), top);
  check_sides(companion_sides<ZetaLaurent>({{z, 0}, {zi, 0}, {-1, 1}, 2}, top), top);
  // Without the clearing factor the (zeta; q)_n denominators are not invertible.
  try {
    (void)companion_sides<ZetaLaurent>({{z, 0}, {zi, 0}, {1, 1}}, top);
    FAIL("expected not-invertible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_invertible);
  }
}

TEST_CASE("divergent specializations are refused") {
  // t of q-order zero: the terms never leave the window.
  CHECK_THROWS_AS(heine_sides<Rational>({m(1, 1), m(1, 2), m(1, 3), m(2, 0)}, 10), Error);
}

TEST_CASE("unit Bailey pair gives the q-Gauss sum") {
  const std::vector<std::array<M, 3>> specs = {
      {m(1, 0), m(2, 0), m(3, 0)}, {m(1, 1), m(1, 0), m(Rational(1, 2), 0)}, {m(2, 2), m(-1, 1), m(1, 0)}};
  for (const auto& [a, r1, r2] : specs) {
    const auto pair = unit_bailey_pair(a);
    CHECK(check_bailey_pair(pair, 8, 30).pass);
    check_sides(apply_bailey_lemma(pair, r1, r2, 30), 30);
  }
}

TEST_CASE("four-parameter pair satisfies the defining relation") {
  const std::vector<std::array<M, 4>> specs = {
      {m(1, 1), m(2, 0), m(3, 0), m(5, 0)},
      {m(1, 2), m(1, 1), m(-1, 0), m(Rational(1, 2), 0)},
      {m(3, 1), m(1, 0), m(2, 1), m(-2, 0)},
      {m(Rational(1, 2), 2), m(3, 1), m(1, 1), m(1, 2)},
      {m(2, 1), m(-3, 0), m(Rational(1, 3), 0), m(4, 1)},
  };
  for (const auto& [a, b, c, d] : specs) {
    const auto res = check_bailey_pair(lovejoy_bailey_pair(a, b, c, d), 6, 24);
    CHECK(res.pass);
    CHECK(res.checked_through == 6);
  }
  const auto res = check_bailey_pair(lovejoy_bailey_pair(m(1, 2), m(1, 1), m(-1, 0), m(1, 1), 2), 6, 24);
  CHECK(res.pass);
  // The (adQ/bc)_n numerator breaks the relation already at n = 1.
  const auto printed = check_bailey_pair(lovejoy_bailey_pair(m(1, 1), m(2, 0), m(3, 0), m(5, 0), 1, true), 6, 24);
  CHECK_FALSE(printed.pass);
  CHECK(printed.failing_n == 1);
}

TEST_CASE("parity pair: closed form, limit recipe and the lemma") {
  const auto closed = parity_bailey_pair<BigInt>();
  const auto check = check_bailey_pair(closed, 12, 60);
  CHECK(check.pass);
  CHECK(check.checked_through == 12);

  const auto limit = lovejoy_limit_pair<Rational>({1, 4}, {1, 1}, 2);
  const auto closed_q = parity_bailey_pair<Rational>();
  for (int n = 0; n <= 12; ++n) {
    INFO("n = " << n);
    CHECK_FALSE(first_difference(limit.alpha(n, 80), closed_q.alpha(n, 80)).has_value());
    CHECK_FALSE(first_difference(limit.beta(n, 80), closed_q.beta(n, 80)).has_value());
  }

  // rho1 = rho2 = q^2
  const int top = 40;
  const auto s = apply_bailey_lemma<BigInt>(closed, {1, 2}, {1, 2}, top);
  oracle::DenseSeries lhs(top), rhs(top);
  for (int n = 0; 2 * n <= top; ++n) {
    oracle::DenseSeries t(top, 1);
    t.times_monomial(1, 2 * n);
    for (int j = 0; j < n; ++j) {
      t.times_binomial(1, 2 + 2 * j);
      t.times_binomial(1, 2 + 2 * j);
      t.over_binomial(1, 3 + 2 * j);
    }
    lhs.add(t);
  }
  for (int n = 0; 3 * n * n + 6 * n - 2 * n * n - 3 * n <= top; ++n)
    for (int j = 0; j <= n; ++j) {
      const int e = 3 * n * n + 6 * n - 2 * j * j - 3 * j;
      if (e > top) continue;
      oracle::DenseSeries t(top, n % 2 == 0 ? 1 : -1);
      t.times_monomial(1, e);
      t.times_binomial(-1, 2 * n + 2);
      t.times_binomial(-1, 2 * j + 1);
      t.over_binomial(1, 2 * n + 2);
      t.times_binomial(1, 1);
      rhs.add(t);
    }
  for (int n = 0; n <= top; ++n) {
    INFO("q^" << n);
    CHECK(mpq_class(s.lhs.coefficient(n)) == lhs.c[n]);
    CHECK(mpq_class(s.rhs.coefficient(n)) == rhs.c[n]);
  }
}

TEST_CASE("a broken pair is rejected before the lemma") {
  auto pair = parity_bailey_pair<BigInt>();
  auto good = pair.alpha;
  pair.alpha = [good](int n, int top) {
    auto a = good(n, top);
    if (n == 3) a = a + Laurent<BigInt>{10, Series<BigInt>::one(std::max(0, top - 10))};
    return a;
  };
  CHECK_FALSE(check_bailey_pair(pair, 12, 60).pass);
  try {
    (void)apply_bailey_lemma<BigInt>(pair, {1, 2}, {1, 2}, 40);
    FAIL("expected bailey-relation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::bailey_relation);
  }
}
