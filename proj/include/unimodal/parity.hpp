#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "unimodal/rings.hpp"
#include "unimodal/series.hpp"

namespace unimodal {

/// U2(1;-q) mod 2 from the double sum
///   sum_{n >= 0, 0 <= j <= n} (1 + q^{2j+1}) q^{3n^2+6n-2j^2-3j+2}.
Series<Mod2> u2_mod2_series(int order);

/// U2(1;-q) mod 2 from the defining q-series, reduced coefficientwise.
Series<Mod2> u2_mod2_from_definition(int order);

/// The same double sum over the integers (not reduced).
Series<BigInt> u2_double_sum(int order);

/// Number of pairs (N, J) with N >= 3, N = 2 mod 4, J odd,
/// -N/3 < J <= N/3 and N^2 - 6J^2 = m.
std::int64_t rep_count(std::int64_t m);

/// Number of (u, v) with u > 0, -u/3 < v <= u/3 and u^2 - 6v^2 = m: one
/// representative per class of solutions under multiplication by
/// +-(5 + 2 sqrt 6)^r.
std::int64_t fundamental_domain_count(std::int64_t m);

struct FactoredInteger {
  std::uint64_t value = 1;
  std::map<std::uint64_t, int> factors;
};

inline constexpr std::uint64_t kFactorizationLimit = 1'000'000'000'000ULL;

/// Trial division by sieved primes up to sqrt(n); refuses n beyond
/// kFactorizationLimit with size-limit.
FactoredInteger factorize(std::uint64_t n);

/// Throws uncertified-factorization unless every key is prime, every
/// exponent positive and the product equals the value.
void certify(const FactoredInteger& f);

/// a(m) by the prime-class formula (primes classed mod 24).
std::int64_t ideal_count(const FactoredInteger& f);

/// Whether 8n - 1 = 3^b l^2 p^c with p = 5, 23 mod 24 prime, p not dividing
/// l, and c = 1 mod 4.
bool is_odd_predicate(std::int64_t n);

struct ParityRow {
  std::int64_t n = 0;
  bool series_bit = false;      // u2(n) mod 2 from the double sum
  bool definition_bit = false;  // u2(n) mod 2 from the defining series
  std::int64_t reps = 0;        // rep_count(16n - 2)
  bool predicate = false;
  bool agree() const { return series_bit == definition_bit && series_bit == ((reps / 2) % 2 != 0) && series_bit == predicate && reps % 2 == 0; }
};

/// Rows for n = 1..max_n, computed over `threads` workers.
std::vector<ParityRow> parity_scan(std::int64_t max_n, unsigned threads = 0);

}  // namespace unimodal
