#include "unimodal/parity.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "unimodal/gf.hpp"

namespace unimodal {

namespace {

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

}  // namespace

Series<BigInt> u2_double_sum(int order) {
  Series<BigInt> s(order);
  // 3n^2 + 6n - 2j^2 - 3j + 2 >= n^2 + 3n + 2 for 0 <= j <= n.
  for (int n = 0; n * n + 3 * n + 2 <= order; ++n) {
    for (int j = 0; j <= n; ++j) {
      const int e = 3 * n * n + 6 * n - 2 * j * j - 3 * j + 2;
      if (e <= order) s[e] += 1;
      if (e + 2 * j + 1 <= order) s[e + 2 * j + 1] += 1;
    }
  }
  return s;
}

Series<Mod2> u2_mod2_series(int order) {
  Series<Mod2> s(order);
  for (int n = 0; n * n + 3 * n + 2 <= order; ++n) {
    for (int j = 0; j <= n; ++j) {
      const int e = 3 * n * n + 6 * n - 2 * j * j - 3 * j + 2;
      if (e <= order) s[e] += Mod2(1);
      if (e + 2 * j + 1 <= order) s[e + 2 * j + 1] += Mod2(1);
    }
  }
  return s;
}

Series<Mod2> u2_mod2_from_definition(int order) { return negate_q(build_U2<Mod2>(Mod2(1), order)); }

std::int64_t rep_count(std::int64_t m) {
  if (m <= 0) throw Error(ErrorKind::domain, "rep_count needs a positive argument");
  // J <= N/3 forces m = N^2 - 6J^2 >= N^2/3.
  const std::int64_t nmax = isqrt(3 * m) + 1;
  std::int64_t count = 0;
  for (std::int64_t n = 6; n <= nmax; n += 4) {
    const std::int64_t d = n * n - m;
    if (d < 0 || d % 6 != 0) continue;
    const std::int64_t j = isqrt(d / 6);
    if (j * j * 6 != d || j % 2 == 0) continue;
    for (std::int64_t jj : {j, -j}) {
      if (-n < 3 * jj && 3 * jj <= n) ++count;
    }
  }
  return count;
}

std::int64_t fundamental_domain_count(std::int64_t m) {
  if (m <= 0) throw Error(ErrorKind::domain, "fundamental_domain_count needs a positive argument");
  const std::int64_t umax = isqrt(3 * m) + 1;
  std::int64_t count = 0;
  for (std::int64_t u = 1; u <= umax; ++u) {
    const std::int64_t d = u * u - m;
    if (d < 0 || d % 6 != 0) continue;
    const std::int64_t v = isqrt(d / 6);
    if (v * v * 6 != d) continue;
    if (v == 0) {
      ++count;
      continue;
    }
    for (std::int64_t vv : {v, -v})
      if (-u < 3 * vv && 3 * vv <= u) ++count;
  }
  return count;
}

FactoredInteger factorize(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::domain, "cannot factor 0");
  if (n > kFactorizationLimit)
    throw Error(ErrorKind::size_limit, std::to_string(n) + " exceeds the trial-division limit");
  FactoredInteger f;
  f.value = n;
  const auto primes = primes_up_to(static_cast<std::uint32_t>(std::sqrt(static_cast<double>(n))) + 1);
  for (std::uint32_t p : primes) {
    if (static_cast<std::uint64_t>(p) * p > n) break;
    while (n % p == 0) {
      ++f.factors[p];
      n /= p;
    }
  }
  if (n > 1) ++f.factors[n];
  return f;
}

void certify(const FactoredInteger& f) {
  std::uint64_t product = 1;
  for (const auto& [p, e] : f.factors) {
    if (e <= 0 || !is_prime(p))
      throw Error(ErrorKind::uncertified_factorization, std::to_string(p) + "^" + std::to_string(e) + " is not a prime power");
    for (int i = 0; i < e; ++i) product *= p;
  }
  if (product != f.value)
    throw Error(ErrorKind::uncertified_factorization, "factors multiply to " + std::to_string(product) + ", not " +
                                                          std::to_string(f.value));
}

std::int64_t ideal_count(const FactoredInteger& f) {
  certify(f);
  std::int64_t result = 1;
  int parity = 0;
  for (const auto& [p, e] : f.factors) {
    if (p == 2) {
      parity += e;
      continue;
    }
    if (p == 3) continue;
    switch (p % 24) {
      case 7: case 17: case 11: case 13:  // +-7, +-11: inert
        if (e % 2 != 0) return 0;
        break;
      case 1: case 19:  // split, norm +p generator
        result *= e + 1;
        break;
      case 5: case 23:  // split, generators of norm -p
        result *= e + 1;
        parity += e;
        break;
      default:
        throw Error(ErrorKind::domain, "unexpected prime class");
    }
  }
  return parity % 2 != 0 ? 0 : result;
}

bool is_odd_predicate(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::domain, "is_odd_predicate needs n >= 1");
  const FactoredInteger f = factorize(static_cast<std::uint64_t>(8 * n - 1));
  int odd_primes = 0;
  bool ok = false;
  for (const auto& [p, e] : f.factors) {
    if (p == 3 || e % 2 == 0) continue;
    ++odd_primes;
    ok = (p % 24 == 5 || p % 24 == 23) && e % 4 == 1;
  }
  return odd_primes == 1 && ok;
}

std::vector<ParityRow> parity_scan(std::int64_t max_n, unsigned threads) {
  if (max_n < 1) return {};
  if (max_n > 1'000'000) throw Error(ErrorKind::size_limit, "parity scan is capped at n = 10^6");
  const int order = static_cast<int>(max_n);
  const Series<Mod2> sum = u2_mod2_series(order);
  const Series<Mod2> def = u2_mod2_from_definition(order);
  std::vector<ParityRow> rows(static_cast<std::size_t>(max_n));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  auto work = [&](unsigned w) {
    for (std::int64_t n = 1 + w; n <= max_n; n += threads) {
      ParityRow& r = rows[static_cast<std::size_t>(n - 1)];
      r.n = n;
      r.series_bit = sum[static_cast<int>(n)].v;
      r.definition_bit = def[static_cast<int>(n)].v;
      r.reps = rep_count(16 * n - 2);
      r.predicate = is_odd_predicate(n);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace unimodal
