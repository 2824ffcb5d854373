#pragma once

#include <optional>
#include <string>
#include <utility>

#include "unimodal/qproduct.hpp"

namespace unimodal {

/// i^unit_tag * zeta^{zeta_half/2} * q^{q24/24} * body / den.
///
/// Holds eta, theta, mu and the Appell functions, whose prefactors live on
/// the lattices (1/2)Z for zeta and (1/24)Z for q. The fourth root of unity
/// and the zeta-polynomial denominator stay outside the body so the body
/// remains an integral zeta-Laurent series.
struct PrefixedSeries {
  int zeta_half = 0;
  int q24 = 0;
  int unit_tag = 0;
  Series<ZetaLaurent> body;
  ZetaLaurent den = 1;

  PrefixedSeries() = default;
  explicit PrefixedSeries(Series<ZetaLaurent> b, int zeta_half_ = 0, int q24_ = 0, int tag = 0,
                          ZetaLaurent d = 1);

  static PrefixedSeries one(int order) { return PrefixedSeries(Series<ZetaLaurent>::one(order)); }

  int order() const { return body.order(); }
  /// Highest absolute q-power (in 24ths) the value is known through.
  int precision24() const { return q24 + 24 * body.order(); }

  PrefixedSeries& operator*=(const PrefixedSeries& o);
  PrefixedSeries& operator*=(const ZetaLaurent& c);
  friend PrefixedSeries operator*(PrefixedSeries a, const PrefixedSeries& b) { return a *= b; }
  friend PrefixedSeries operator*(PrefixedSeries a, const ZetaLaurent& c) { return a *= c; }
  friend PrefixedSeries operator*(const ZetaLaurent& c, PrefixedSeries a) { return a *= c; }
  friend PrefixedSeries operator-(PrefixedSeries a);
  /// Sum; the two prefixes must differ by an integral zeta power, an integral
  /// q power and a sign, otherwise lattice-mismatch.
  friend PrefixedSeries operator+(const PrefixedSeries& a, const PrefixedSeries& b);
  friend PrefixedSeries operator-(const PrefixedSeries& a, const PrefixedSeries& b) { return a + (-b); }

  PrefixedSeries inverse() const;
  PrefixedSeries pow(int k) const;
  /// Moves leading zero coefficients of the body into the q offset.
  PrefixedSeries normalized() const;

  /// Plain series in zeta and q, through the absolute precision. Requires
  /// integral offsets, a real unit and an exactly divisible denominator.
  Series<ZetaLaurent> to_integral() const;
  /// Same, allowing negative q-powers.
  Laurent<ZetaLaurent> to_laurent() const;
};

/// Location of the first differing term, in lattice units (halves of a
/// zeta power, 24ths of a q power).
struct PrefixedMismatch {
  int zeta_half = 0;
  int q24 = 0;
};

/// Equality through the common precision after aligning prefixes;
/// nullopt when equal. Throws lattice-mismatch when the prefixes cannot be
/// aligned.
std::optional<PrefixedMismatch> prefixed_equal(const PrefixedSeries& a, const PrefixedSeries& b);

PrefixedSeries prefixed_mul(const PrefixedSeries& a, const PrefixedSeries& b);

}  // namespace unimodal
