#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "unimodal/enumerators.hpp"
#include "unimodal/gf.hpp"
#include "unimodal/modular.hpp"

using namespace unimodal;

namespace {

const ZetaLaurent z = ZetaLaurent::monomial(1);

using Grid = std::map<std::pair<int, int>, mpz_class>;  // (m, n) -> coefficient

// Direct expansion of a bilateral Lambert sum over |n| <= span, written
// against a sparse (zeta, q) grid. Each term is expanded as a geometric
// series in the pole monomial, or in its inverse when the pole has negative
// q-order. Terms with a pole of q-order zero are skipped and returned
// separately through `held`.
Grid direct_bilateral(bool alternating, int quad2, int lin2, int zeta_step, int sign, int ze, int step,
                      int offset, int span, int top, Grid* held = nullptr) {
  Grid out;
  for (int n = -span; n <= span; ++n) {
    const int e = (quad2 * n * n + lin2 * n) / 2;
    const int c = (alternating && n % 2 != 0) ? -1 : 1;
    const int k = step * n + offset;
    if (k == 0) {
      if (held) (*held)[{zeta_step * n, e}] += c;
      continue;
    }
    // 1/(1 - P), P = sign z^ze q^k.
    if (k > 0) {
      for (int r = 0; e + k * r <= top; ++r) {
        const int s = (sign < 0 && r % 2 != 0) ? -1 : 1;
        out[{zeta_step * n + ze * r, e + k * r}] += c * s;
      }
    } else {
      for (int r = 1; e - k * r <= top; ++r) {
        const int s = (sign < 0 && r % 2 != 0) ? -1 : 1;
        out[{zeta_step * n - ze * r, e - k * r}] -= c * s;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Grid grid_of(const Series<ZetaLaurent>& f, int shift = 0) {
  Grid g;
  for (int n = 0; n <= f.order(); ++n)
    for (const auto& [m, c] : f[n].terms()) g[{m, n + shift}] = c;
  return g;
}

Grid restrict(const Grid& g, int lo, int hi) {
  Grid r;
  for (const auto& [k, c] : g)
    if (k.second >= lo && k.second <= hi && c != 0) r[k] = c;
  return r;
}

void check_against_counts(const Series<ZetaLaurent>& f, int max_n,
                          const std::function<std::map<int, std::int64_t>(int)>& counts) {
  for (int n = 0; n <= max_n; ++n) {
    std::map<int, std::int64_t> from_series;
    for (const auto& [m, c] : f[n].terms()) from_series[m] = c.get_si();
    INFO("n = " << n);
    CHECK(from_series == counts(n));
  }
}

bool nonnegative(const Series<ZetaLaurent>& f) {
  for (int n = 0; n <= f.order(); ++n)
    for (const auto& t : f[n].terms())
      if (t.second < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("partition series") {
  auto p = build_P<BigInt>(10);
  const int expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(p[n] == expect[n]);
}

TEST_CASE("builders equal the enumerators by rank") {
  const int max_n = 22;
  auto by_rank = [](Family f) { return [f](int n) { return count_by_rank(f, n); }; };

  check_against_counts(build_R<ZetaLaurent>({z, 0}, 1, max_n), max_n, by_rank(Family::partition_with_rank));
  check_against_counts(build_U(z, max_n), max_n, by_rank(Family::strongly_unimodal));
  check_against_counts(build_Ubar(z, max_n), max_n, by_rank(Family::left_heavy_overlined));
  check_against_counts(negate_q(build_Ubar2(z, max_n)), max_n, by_rank(Family::m2_left_heavy_overlined));
  check_against_counts(negate_q(build_U2(z, max_n)), max_n, by_rank(Family::m2_left_heavy));
  check_against_counts(build_Rbar(z, max_n), max_n, [](int n) { return overpartition_rank_counts(n); });
  check_against_counts(build_Rbar2(z, max_n), max_n, [](int n) { return overpartition_m2_rank_counts(n); });
  check_against_counts(build_R2(z, max_n), max_n, [](int n) { return odd_distinct_m2_rank_counts(n); });
}

TEST_CASE("golden coefficients") {
  auto ubar = build_Ubar(z, 40);
  CHECK(ubar[3].at_one() == 3);
  auto u2 = negate_q(build_U2(z, 40));
  CHECK(u2[6] == ZetaLaurent::from_terms({{-1, 1}, {0, 3}, {1, 1}}));
  auto ubar2 = negate_q(build_Ubar2(z, 40));
  CHECK(ubar2[7] == ZetaLaurent::from_terms({{-1, 1}, {0, 3}, {1, 1}}));
  CHECK(zeta_coefficient(build_U(z, 10), 0, 3) == 1);
}

TEST_CASE("zeta = 1 builds agree with summed zeta coefficients") {
  const int n = 40;
  CHECK(at_zeta_one(build_Ubar(z, n)) == build_Ubar<BigInt>(1, n));
  CHECK(at_zeta_one(build_Ubar2(z, n)) == build_Ubar2<BigInt>(1, n));
  CHECK(at_zeta_one(build_U2(z, n)) == build_U2<BigInt>(1, n));
  CHECK(at_zeta_one(build_U(z, n)) == build_U<BigInt>(1, n));
}

TEST_CASE("rank series are conjugation symmetric, sign conventions make counts nonnegative") {
  const int n = 40;
  for (const auto& f : {build_U(z, n), build_Ubar(z, n), build_Ubar2(z, n), build_U2(z, n), build_Rbar(z, n),
                        build_Rbar2(z, n), build_R2(z, n), build_R<ZetaLaurent>({z, 0}, 1, n)})
    CHECK(conjugate_zeta(f) == f);
  CHECK(nonnegative(negate_q(build_Ubar2(z, n))));
  CHECK(nonnegative(negate_q(build_U2(z, n))));
  CHECK_FALSE(nonnegative(build_Ubar2(z, n)));
}

TEST_CASE("bilateral expansion") {
  // sum (-1)^n q^{2n^2+3n} / (1 + z q^{2n+1})
  BilateralSpec spec;
  spec.alternating = true;
  spec.quad2 = 4;
  spec.lin2 = 6;
  spec.pole = BilateralSpec::Pole{-1, 1, 2, 1};
  auto s = bilateral_expand(spec, 20);
  CHECK(s.q24 == 0);
  CHECK(s.body[0] == ZetaLaurent(1) - ZetaLaurent::monomial(-1));
  auto direct = direct_bilateral(true, 4, 6, 0, -1, 1, 2, 1, 8, 20);
  CHECK(grid_of(s.body) == restrict(direct, 0, 20));

  SUBCASE("divergent specs") {
    spec.pole->step = 0;
    CHECK_THROWS_AS(bilateral_expand(spec, 5), Error);
    spec.pole->step = 2;
    spec.quad2 = 0;
    CHECK_THROWS_AS(bilateral_expand(spec, 5), Error);
  }
  SUBCASE("order zero with terms starting above q^0") {
    BilateralSpec t;
    t.quad2 = 2;
    t.lin2 = 2;
    t.constant = 1;
    auto r = bilateral_series(t, 0);
    CHECK(r.is_zero());
  }
}

TEST_CASE("Jacobi triple product") {
  const EllipticArg args[] = {{1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {-1, 0, 1}, {2, 0, 0}, {1, 1, 1}, {1, -1, 0}};
  for (int k : {1, 2, 3}) {
    for (const auto& a : args) {
      INFO("arg " << a.to_string() << " scale " << k);
      auto sum = theta(a, k, 40);
      auto prod = theta_product(a, k, 40);
      CHECK_FALSE(prefixed_equal(sum, prod).has_value());
      CHECK(std::min(sum.precision24(), prod.precision24()) >= 24 * 39);
    }
  }
  // A wrong sign on the product must be detected.
  auto sum = theta({1, 0, 0}, 1, 20);
  CHECK(prefixed_equal(sum, -theta_product({1, 0, 0}, 1, 20)).has_value());
}

TEST_CASE("eta") {
  auto e = eta(1, 30);
  auto e24 = e.pow(24);
  CHECK(e24.q24 == 24);
  auto one = (e24 * e24.inverse()).normalized();
  CHECK(one.q24 == 0);
  CHECK(one.zeta_half == 0);
  CHECK(one.body == Series<ZetaLaurent>::one(one.order()));
}

// (1 - z) * (rest + held / (1 - z)) as a series with denominator 1 - z.
static PrefixedSeries cleared_pole(const Grid& rest, const Grid& held, int zeta_half, int top) {
  Grid cleared;
  for (const auto& [k, c] : rest) {
    cleared[{k.first, k.second}] += c;
    cleared[{k.first + 1, k.second}] -= c;
  }
  for (const auto& [k, c] : held) cleared[k] += c;
  PrefixedSeries out(Series<ZetaLaurent>(top), zeta_half, 0, 0, ZetaLaurent(1) - z);
  for (const auto& [k, c] : restrict(cleared, 0, top)) out.body[k.second] += ZetaLaurent::monomial(k.first, c);
  return out;
}

TEST_CASE("mu and Appell against direct summation") {
  const int top = 20;
  const EllipticArg u{1, 0, 0};
  // mu(z, z; tau) theta(z; tau) = z^{1/2} sum (-1)^n q^{n(n+1)/2} z^n / (1 - z q^n).
  auto lhs = mu(u, u, 1, top + 2) * theta(u, 1, top + 2);
  Grid held;
  auto direct = direct_bilateral(true, 1, 1, 1, 1, 1, 1, 0, 12, top, &held);
  REQUIRE(held.size() == 1);
  CHECK_FALSE(prefixed_equal(lhs, cleared_pole(direct, held, 1, top)).has_value());

  // A_2(z, 1/2; tau) = z sum (-1)^n q^{n^2+n} / (1 - z q^n).
  auto a2 = appell(2, u, {0, 0, 1}, 1, top);
  CHECK(a2.zeta_half == 2);
  CHECK(a2.den == ZetaLaurent(1) - z);
  held.clear();
  auto d2 = direct_bilateral(true, 2, 2, 0, 1, 1, 1, 0, 12, top, &held);
  CHECK_FALSE(prefixed_equal(a2, cleared_pole(d2, held, 2, top)).has_value());

  // A_3(z, -tau; tau): exponent 3n(n+1)/2 - n, zeta^0, same pole.
  auto a3 = appell(3, u, {0, -1, 0}, 1, top);
  held.clear();
  auto d3 = direct_bilateral(true, 3, 1, 0, 1, 1, 1, 0, 12, top, &held);
  CHECK_FALSE(prefixed_equal(a3, cleared_pole(d3, held, 3, top)).has_value());
}

TEST_CASE("theta zero and unsupported arguments") {
  try {
    (void)mu({1, 0, 0}, {0, 0, 0}, 1, 10);
    FAIL("expected theta-zero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::theta_zero);
  }
  CHECK(parse_elliptic_arg("z+tau+1/2") == EllipticArg{1, 1, 1});
  CHECK(parse_elliptic_arg("-z + 1/2") == EllipticArg{-1, 0, 1});
  CHECK(parse_elliptic_arg("2z-tau") == EllipticArg{2, -1, 0});
  for (const char* bad : {"z^2", "z*tau", "1/3", "w", ""}) {
    try {
      (void)parse_elliptic_arg(bad);
      FAIL("expected unsupported-specialization for " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::unsupported_specialization);
    }
  }
}
