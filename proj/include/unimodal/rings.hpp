#pragma once

#include <gmpxx.h>

#include <string>

#include "unimodal/error.hpp"
#include "unimodal/zeta_laurent.hpp"

namespace unimodal {

using Rational = mpq_class;

/// Integers modulo 2.
struct Mod2 {
  bool v = false;

  Mod2() = default;
  Mod2(long x) : v((x & 1) != 0) {}  // NOLINT(google-explicit-constructor)
  Mod2(const BigInt& x) : v(mpz_odd_p(x.get_mpz_t()) != 0) {}  // NOLINT

  Mod2& operator+=(Mod2 o) { v ^= o.v; return *this; }
  Mod2& operator-=(Mod2 o) { v ^= o.v; return *this; }
  Mod2& operator*=(Mod2 o) { v = v && o.v; return *this; }
  friend Mod2 operator+(Mod2 a, Mod2 b) { return a += b; }
  friend Mod2 operator-(Mod2 a, Mod2 b) { return a -= b; }
  friend Mod2 operator*(Mod2 a, Mod2 b) { return a *= b; }
  friend Mod2 operator-(Mod2 a) { return a; }
  friend bool operator==(Mod2 a, Mod2 b) = default;
};

/// Ring capability table. Every specialization provides
/// zero/one/is_zero/is_unit/inverse/add_mul/to_string and `exact_div`
/// (exact quotient or nullopt).
template <class R>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
  static BigInt zero() { return 0; }
  static BigInt one() { return 1; }
  static bool is_zero(const BigInt& a) { return a == 0; }
  static bool is_unit(const BigInt& a) { return a == 1 || a == -1; }
  static BigInt inverse(const BigInt& a) {
    if (!is_unit(a)) throw Error(ErrorKind::not_invertible, a.get_str() + " is not a unit in Z");
    return a;
  }
  static std::optional<BigInt> exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    BigInt r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static void add_mul(BigInt& acc, const BigInt& a, const BigInt& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static std::string to_string(const BigInt& a) { return a.get_str(); }
};

template <>
struct RingTraits<Rational> {
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& a) { return a == 0; }
  static bool is_unit(const Rational& a) { return a != 0; }
  static Rational inverse(const Rational& a) {
    if (a == 0) throw Error(ErrorKind::not_invertible, "division by zero in Q");
    return Rational(1) / a;
  }
  static std::optional<Rational> exact_div(const Rational& a, const Rational& b) {
    if (b == 0) return std::nullopt;
    return Rational(a / b);
  }
  static void add_mul(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
  static std::string to_string(const Rational& a) { return a.get_str(); }
};

template <>
struct RingTraits<Mod2> {
  static Mod2 zero() { return 0; }
  static Mod2 one() { return 1; }
  static bool is_zero(Mod2 a) { return !a.v; }
  static bool is_unit(Mod2 a) { return a.v; }
  static Mod2 inverse(Mod2 a) {
    if (!a.v) throw Error(ErrorKind::not_invertible, "0 is not a unit mod 2");
    return a;
  }
  static std::optional<Mod2> exact_div(Mod2 a, Mod2 b) {
    if (!b.v) return std::nullopt;
    return a;
  }
  static void add_mul(Mod2& acc, Mod2 a, Mod2 b) { acc.v ^= (a.v && b.v); }
  static std::string to_string(Mod2 a) { return a.v ? "1" : "0"; }
};

template <>
struct RingTraits<ZetaLaurent> {
  static ZetaLaurent zero() { return {}; }
  static ZetaLaurent one() { return 1; }
  static bool is_zero(const ZetaLaurent& a) { return a.is_zero(); }
  static bool is_unit(const ZetaLaurent& a) { return a.is_unit(); }
  static ZetaLaurent inverse(const ZetaLaurent& a) { return unit_inverse(a); }
  static std::optional<ZetaLaurent> exact_div(const ZetaLaurent& a, const ZetaLaurent& b) {
    return exact_divide(a, b);
  }
  static void add_mul(ZetaLaurent& acc, const ZetaLaurent& a, const ZetaLaurent& b) {
    acc.add_product(a, b);
  }
  static std::string to_string(const ZetaLaurent& a) { return a.to_string(); }
};

}  // namespace unimodal
