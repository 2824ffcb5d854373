#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace unimodal {

using BigInt = mpz_class;

/// Laurent polynomial in ζ with big-integer coefficients.
///
/// Stored sparsely as (exponent, coefficient) pairs sorted by exponent with no
/// zero coefficients, so equality is structural.
class ZetaLaurent {
 public:
  using Term = std::pair<int, BigInt>;

  ZetaLaurent() = default;
  ZetaLaurent(long c);  // NOLINT(google-explicit-constructor): ring literal
  ZetaLaurent(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static ZetaLaurent monomial(int exponent, const BigInt& c = 1);
  /// Builds from arbitrary (possibly unsorted, repeated, zero) terms.
  static ZetaLaurent from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  /// Units of ℤ[ζ, ζ⁻¹] are exactly ±ζᵏ.
  bool is_unit() const;
  bool is_constant() const;
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  BigInt coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// Multiplication by ζᵏ.
  ZetaLaurent shifted(int k) const;
  /// ζ ↦ ζ⁻¹.
  ZetaLaurent conjugate() const;
  /// ζ ↦ -ζ.
  ZetaLaurent sign_twisted() const;
  /// Value at ζ = 1.
  BigInt at_one() const;
  /// Integer content (non-negative gcd of coefficients).
  BigInt content() const;

  ZetaLaurent& operator+=(const ZetaLaurent& other);
  ZetaLaurent& operator-=(const ZetaLaurent& other);
  ZetaLaurent& operator*=(const ZetaLaurent& other);
  ZetaLaurent& operator*=(const BigInt& c);

  friend ZetaLaurent operator+(ZetaLaurent a, const ZetaLaurent& b) { return a += b; }
  friend ZetaLaurent operator-(ZetaLaurent a, const ZetaLaurent& b) { return a -= b; }
  friend ZetaLaurent operator*(const ZetaLaurent& a, const ZetaLaurent& b);
  friend ZetaLaurent operator-(ZetaLaurent a);
  friend bool operator==(const ZetaLaurent& a, const ZetaLaurent& b) = default;

  /// this += a * b without a temporary.
  void add_product(const ZetaLaurent& a, const ZetaLaurent& b);

  std::string to_string() const;

 private:
  explicit ZetaLaurent(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

/// Exact division in ℤ[ζ, ζ⁻¹]; nullopt when `b` does not divide `a`.
std::optional<ZetaLaurent> exact_divide(const ZetaLaurent& a, const ZetaLaurent& b);
/// Inverse of a unit ±ζᵏ.
ZetaLaurent unit_inverse(const ZetaLaurent& u);

}  // namespace unimodal
