// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Expected values marked "golden" are published examples; everything else is
// compared against an independent route (enumeration, brute force, or a
// recurrence written here).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "unimodal/asymptotics.hpp"
#include "unimodal/enumerators.hpp"
#include "unimodal/gf.hpp"
#include "unimodal/identities.hpp"
#include "unimodal/parity.hpp"

using namespace unimodal;

namespace {

using RankMap = std::map<int, std::int64_t>;

const ZetaLaurent z = ZetaLaurent::monomial(1);

struct Outcome {
  bool pass = true;
  std::string detail;
};

RankMap rank_map(const ZetaLaurent& c) {
  RankMap r;
  for (const auto& [m, v] : c.terms()) r[m] = v.get_si();
  return r;
}

std::string show(const RankMap& r) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [m, c] : r) {
    for (std::int64_t i = 0; i < c; ++i) {
      os << (first ? "" : ",") << m;
      first = false;
    }
    if (c < 0) os << (first ? "" : ",") << m << "x" << c;
  }
  return os.str() + '}';
}

// The generating series attached to each enumerated family.
Series<ZetaLaurent> family_series(Family f, int n) {
  switch (f) {
    case Family::partition: {
      const auto p = build_P<BigInt>(n);
      Series<ZetaLaurent> s(n);
      for (int i = 0; i <= n; ++i) s[i] = ZetaLaurent(p[i]);
      return s;
    }
    case Family::partition_with_rank:
      return build_R<ZetaLaurent>({z, 0}, 1, n);
    case Family::overpartition:
      return build_Rbar(z, n);
    case Family::strongly_unimodal:
      return build_U(z, n);
    case Family::left_heavy_overlined:
      return build_Ubar(z, n);
    case Family::m2_left_heavy_overlined:
      return negate_q(build_Ubar2(z, n));
    case Family::m2_left_heavy:
      return negate_q(build_U2(z, n));
  }
  return Series<ZetaLaurent>(n);
}

// First (n, rank map) where a series and an enumerator disagree.
std::optional<int> first_rank_mismatch(const Series<ZetaLaurent>& s, const std::function<RankMap(int)>& counts, int max_n) {
  for (int n = 0; n <= max_n; ++n)
    if (rank_map(s[n]) != counts(n)) return n;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Outcome criterion_golden() {
  Outcome o;
  struct Golden {
    Family family;
    int n;
    std::int64_t total;
    RankMap ranks;  // empty: only the total is published
  };
  const Golden golden[] = {
      {Family::left_heavy_overlined, 3, 3, {}},
      {Family::m2_left_heavy_overlined, 7, 5, {{-1, 1}, {0, 3}, {1, 1}}},
      {Family::m2_left_heavy, 6, 5, {{-1, 1}, {0, 3}, {1, 1}}},
  };
  std::ostringstream os;
  for (const auto& g : golden) {
    const RankMap enumerated = count_by_rank(g.family, g.n);
    const RankMap from_series = rank_map(family_series(g.family, g.n)[g.n]);
    const std::int64_t total = count(g.family, g.n);
    const bool ok = total == g.total && enumerated == from_series && (g.ranks.empty() || enumerated == g.ranks) &&
                    family_series(g.family, g.n)[g.n].at_one() == g.total;
    o.pass = o.pass && ok;
    os << to_string(g.family) << "(" << g.n << ")=" << total << " ranks " << show(enumerated) << "; ";
  }
  o.detail = os.str();
  return o;
}

Outcome criterion_catalog() {
  const auto reports = verify_all(40, 0);
  Outcome o;
  int passed = 0;
  std::string failed;
  for (const auto& r : reports) {
    if (r.pass) {
      ++passed;
    } else {
      failed += " " + r.key;
    }
  }
  o.pass = passed == static_cast<int>(reports.size()) && reports.size() == 20;
  o.detail = std::to_string(passed) + "/" + std::to_string(reports.size()) + " keys exact through q^40" +
             (failed.empty() ? "" : "; failing:" + failed);
  return o;
}

Outcome criterion_parity() {
  const auto rows = parity_scan(10'000, 0);
  std::size_t bad = 0;
  std::int64_t first_bad = 0;
  for (const auto& r : rows)
    if (!r.agree() && bad++ == 0) first_bad = r.n;
  Outcome o;
  o.pass = bad == 0 && rows.size() == 10'000;
  o.detail = std::to_string(rows.size()) + " values of n, " + std::to_string(bad) + " disagreements" +
             (bad ? " (first n=" + std::to_string(first_bad) + ")" : "");
  return o;
}

Outcome criterion_ideal_count() {
  std::size_t bad = 0;
  for (std::int64_t m = 1; m <= 10'000; ++m) {
    const auto f = factorize(static_cast<std::uint64_t>(m));
    certify(f);
    if (ideal_count(f) != fundamental_domain_count(m)) ++bad;
  }
  return {bad == 0, "m in [1, 10000], " + std::to_string(bad) + " disagreements"};
}

Outcome criterion_asymptotics(std::vector<std::string>& info) {
  Outcome o;
  std::ostringstream os;
  const std::vector<int> checkpoints = {500, 1000, 2000};
  for (GrowthTarget t : {GrowthTarget::u2bar, GrowthTarget::u2}) {
    const RatioReport rep = ratio_report(t, checkpoints);
    o.pass = o.pass && rep.deviation_decreasing && rep.log_ratio_within_2pct;
    os << to_string(t) << ": |ratio-1|";
    for (const auto& r : rep.rows) os << ' ' << r.deviation;
    os << (rep.deviation_decreasing ? " decreasing" : " NOT decreasing");
    os << ", log(count)/exponent=" << rep.rows.back().log_ratio << (rep.log_ratio_within_2pct ? "" : " (outside 2%)")
       << "; ";
    std::ostringstream extra;
    extra << to_string(t) << " log(count)/log(main term) at 2000 = " << rep.rows.back().log_count / rep.rows.back().log_main
          << (rep.log_main_within_2pct ? " (within 2%)" : " (outside 2%)");
    info.push_back(extra.str());
  }
  o.detail = os.str();
  return o;
}

Outcome criterion_monotonicity() {
  Outcome o;
  std::ostringstream os;
  for (GrowthTarget t : {GrowthTarget::u2bar, GrowthTarget::u2}) {
    const auto d = monotonicity_check(t, 2000);
    o.pass = o.pass && !d;
    os << to_string(t) << (d ? " decreases at n=" + std::to_string(*d) : " nondecreasing through 2000") << "; ";
  }
  const auto neg = first_negative(one_minus_q_ubar2(2000));
  o.pass = o.pass && !neg;
  os << "(1-q)Ubar2(1;-q) " << (neg ? "negative at q^" + std::to_string(*neg) : "nonnegative through q^2000");
  o.detail = os.str();
  return o;
}

// --- property suites -------------------------------------------------------

template <class R>
R random_coeff(std::mt19937_64& rng);

template <>
BigInt random_coeff<BigInt>(std::mt19937_64& rng) {
  return BigInt(static_cast<long>(std::uniform_int_distribution<int>(-50, 50)(rng)));
}
template <>
Rational random_coeff<Rational>(std::mt19937_64& rng) {
  Rational r(std::uniform_int_distribution<int>(-20, 20)(rng), std::uniform_int_distribution<int>(1, 9)(rng));
  r.canonicalize();
  return r;
}
template <>
Mod2 random_coeff<Mod2>(std::mt19937_64& rng) {
  return Mod2(static_cast<long>(rng() & 1));
}
template <>
ZetaLaurent random_coeff<ZetaLaurent>(std::mt19937_64& rng) {
  std::vector<ZetaLaurent::Term> terms;
  const int k = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < k; ++i)
    terms.emplace_back(std::uniform_int_distribution<int>(-3, 3)(rng),
                       BigInt(static_cast<long>(std::uniform_int_distribution<int>(-9, 9)(rng))));
  return ZetaLaurent::from_terms(std::move(terms));
}

template <class R>
R random_unit(std::mt19937_64& rng) {
  if constexpr (std::is_same_v<R, BigInt>) {
    return BigInt((rng() & 1) ? 1L : -1L);
  } else if constexpr (std::is_same_v<R, Rational>) {
    Rational r(std::uniform_int_distribution<int>(1, 9)(rng) * ((rng() & 1) ? 1 : -1),
               std::uniform_int_distribution<int>(1, 9)(rng));
    r.canonicalize();
    return r;
  } else if constexpr (std::is_same_v<R, Mod2>) {
    return Mod2(1L);
  } else {
    return ZetaLaurent::monomial(std::uniform_int_distribution<int>(-3, 3)(rng), (rng() & 1) ? 1 : -1);
  }
}

template <class R>
Series<R> random_series(std::mt19937_64& rng, int order) {
  Series<R> s(order);
  for (int n = 0; n <= order; ++n) s[n] = random_coeff<R>(rng);
  return s;
}


// Ring axioms for truncated series over R; `mul` is injectable so a broken
// product can serve as a negative control. Returns the number of failed cases.
template <class R>
int ring_axiom_failures(int cases, int order, std::uint64_t seed,
                        const std::function<Series<R>(const Series<R>&, const Series<R>&)>& mul) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  const auto one = Series<R>::one(order);
  const Series<R> zero(order);
  for (int i = 0; i < cases; ++i) {
    const auto a = random_series<R>(rng, order), b = random_series<R>(rng, order), c = random_series<R>(rng, order);
    auto u = random_series<R>(rng, order);
    u[0] = random_unit<R>(rng);
    const bool ok = (a + b) + c == a + (b + c) && a + b == b + a && a + zero == a && a + (-a) == zero &&
                    a - b == a + (-b) && mul(mul(a, b), c) == mul(a, mul(b, c)) && mul(a, b) == mul(b, a) &&
                    mul(a, one) == a && mul(a, b + c) == mul(a, b) + mul(a, c) && mul(u, invert(u)) == one;
    failures += !ok;
  }
  return failures;
}

template <class R>
Series<R> product(const Series<R>& a, const Series<R>& b) {
  return a * b;
}

// A product with a wrong top coefficient; only used as a negative control.
template <class R>
Series<R> lossy_product(const Series<R>& a, const Series<R>& b) {
  auto p = a * b;
  p[p.order()] = p[p.order()] + RingTraits<R>::one();
  return p;
}

Outcome criterion_properties() {
  Outcome o;
  std::ostringstream os;
  constexpr int kCases = 100, kOrder = 30;

  // Ring axioms over each coefficient ring.
  const int ring_fail = ring_axiom_failures<BigInt>(kCases, kOrder, 1, product<BigInt>) +
                        ring_axiom_failures<Rational>(kCases, kOrder, 2, product<Rational>) +
                        ring_axiom_failures<Mod2>(kCases, kOrder, 3, product<Mod2>) +
                        ring_axiom_failures<ZetaLaurent>(kCases, kOrder, 4, product<ZetaLaurent>);
  os << "ring axioms " << 4 * kCases - ring_fail << "/" << 4 * kCases << "; ";
  o.pass = o.pass && ring_fail == 0;

  // Conjugation symmetry of every rank series.
  const int n = 40;
  int asym = 0;
  for (const auto& f : {build_U(z, n), build_Ubar(z, n), build_Ubar2(z, n), build_U2(z, n), build_Rbar(z, n),
                        build_Rbar2(z, n), build_R2(z, n), build_R<ZetaLaurent>({z, 0}, 1, n)})
    asym += conjugate_zeta(f) != f;
  os << "conjugation symmetric " << 8 - asym << "/8; ";
  o.pass = o.pass && asym == 0;

  // Marginalization: summing the rank refinement gives the total count.
  int marg_fail = 0;
  for (Family f : kAllFamilies) {
    const auto s = family_series(f, n);
    const auto totals = at_zeta_one(s);
    for (int k = 0; k <= n; ++k) {
      BigInt sum = 0;
      for (const auto& [m, c] : s[k].terms()) sum += c;
      marg_fail += sum != totals[k];
    }
  }
  for (GrowthTarget t : {GrowthTarget::u2bar, GrowthTarget::u2}) {
    const auto counts = exact_counts(t, n);
    const auto s = family_series(t == GrowthTarget::u2 ? Family::m2_left_heavy : Family::m2_left_heavy_overlined, n);
    for (int k = 0; k <= n; ++k) marg_fail += s[k].at_one() != counts[k];
  }
  os << "marginalization " << (marg_fail ? "FAILED" : "ok") << "; ";
  o.pass = o.pass && marg_fail == 0;

  // Ramanujan congruences for p(n), with p(n) from Euler's pentagonal recurrence.
  const int top = 200;
  std::vector<BigInt> p(top + 1);
  p[0] = 1;
  for (int k = 1; k <= top; ++k)
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > k) break;
      const int s = j % 2 ? 1 : -1;
      p[k] += s * p[k - g1];
      if (g2 <= k) p[k] += s * p[k - g2];
    }
  const auto series_p = build_P<BigInt>(top);
  int cong_fail = 0;
  for (int k = 0; k <= top; ++k) {
    cong_fail += series_p[k] != p[k];
    if (k % 5 == 4) cong_fail += mpz_divisible_ui_p(series_p[k].get_mpz_t(), 5) == 0;
    if (k % 7 == 5) cong_fail += mpz_divisible_ui_p(series_p[k].get_mpz_t(), 7) == 0;
  }
  os << "Ramanujan mod 5/7 " << (cong_fail ? "FAILED" : "ok") << "; ";
  o.pass = o.pass && cong_fail == 0;

  // Negative controls: each check above must flip when fed a wrong input.
  int controls = 0, flipped = 0;
  auto control = [&](bool detected) {
    ++controls;
    flipped += detected;
  };
  control(ring_axiom_failures<BigInt>(10, kOrder, 5, lossy_product<BigInt>) > 0);
  control(ring_axiom_failures<ZetaLaurent>(10, kOrder, 6, lossy_product<ZetaLaurent>) > 0);
  {
    auto f = build_U(z, n);
    f[17] += z;
    control(conjugate_zeta(f) != f);
  }
  {
    auto s = family_series(Family::m2_left_heavy, 20);
    s[12] += ZetaLaurent::monomial(2);
    control(first_rank_mismatch(s, [](int k) { return count_by_rank(Family::m2_left_heavy, k); }, 20) == 12);
  }
  {
    auto q = series_p;
    q[104] += 1;
    control(mpz_divisible_ui_p(q[104].get_mpz_t(), 5) == 0);
  }
  for (const auto& rec : identity_catalog()) {
    if (rec.key == "false-dual") continue;  // pair 0 is a polynomial of low degree
    control(!verify(rec.key, 30, Perturbation{0, 0, 15, 1}).pass);
  }
  os << "negative controls flipped " << flipped << "/" << controls;
  o.pass = o.pass && flipped == controls;
  o.detail = os.str();
  return o;
}

Outcome criterion_enumerators() {
  Outcome o;
  std::ostringstream os;
  const int n = 40;
  for (Family f : kAllFamilies) {
    const auto bad = first_rank_mismatch(family_series(f, n), [f](int k) { return count_by_rank(f, k); }, n);
    o.pass = o.pass && !bad;
    if (bad) os << to_string(f) << " differs at n=" << *bad << "; ";
  }
  os << "7 families, all (m, n) with n <= " << n << (o.pass ? " equal" : "");
  o.detail = os.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome(std::vector<std::string>&)> run;
  };
  const Criterion criteria[] = {
      {1, "golden examples", [](auto&) { return criterion_golden(); }},
      {2, "identity catalog", [](auto&) { return criterion_catalog(); }},
      {3, "parity triple agreement", [](auto&) { return criterion_parity(); }},
      {4, "ideal-count formula", [](auto&) { return criterion_ideal_count(); }},
      {5, "asymptotic trend and log-ratio", criterion_asymptotics},
      {6, "monotonicity and nonnegativity", [](auto&) { return criterion_monotonicity(); }},
      {7, "property suites", [](auto&) { return criterion_properties(); }},
      {8, "enumerator-series equality", [](auto&) { return criterion_enumerators(); }},
  };
  bool all = true;
  std::vector<std::string> info;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(info);
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("criterion %d %-32s %s  [%.2fs] %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
  }
  for (const auto& line : info) std::printf("info: %s\n", line.c_str());
  return all ? 0 : 1;
}
