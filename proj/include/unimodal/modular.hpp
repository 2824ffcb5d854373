#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "unimodal/prefixed.hpp"
#include "unimodal/qproduct.hpp"

namespace unimodal {

/// The argument zeta_coeff*z + tau_coeff*tau + half/2, where e^{2 pi i z} is
/// the formal variable zeta and e^{2 pi i tau} = q. Only such monomial
/// specializations are supported.
struct EllipticArg {
  int zeta = 0;
  int tau = 0;
  int half = 0;

  /// e^{2 pi i arg} = (-1)^half zeta^zeta q^tau, as a monomial.
  Monomial<ZetaLaurent> exp2() const;
  std::string to_string() const;
  friend bool operator==(const EllipticArg&, const EllipticArg&) = default;
};

/// Parses forms such as "z", "-z+1/2", "z+tau+1/2", "2z-tau", "1/2".
/// Anything else (powers, products, other fractions) raises
/// unsupported-specialization.
EllipticArg parse_elliptic_arg(std::string_view text);

/// sum_{n in Z} (-1)^{alt n} zeta^{zeta_step n} q^{(quad2 n^2 + lin2 n)/2 + constant}
///   / (1 - sign zeta^e q^{step n + offset})
struct BilateralSpec {
  struct Pole {
    int sign = 1;
    int zeta_exp = 0;
    int step = 1;
    int offset = 0;
  };

  bool alternating = false;
  int quad2 = 2;
  int lin2 = 0;
  int constant = 0;
  int zeta_step = 0;
  std::optional<Pole> pole;
};

/// Expands the bilateral sum with `order` known coefficients past its lowest
/// term. Terms with negative pole order use
///   1/(1 - P) = -P^{-1}/(1 - P^{-1}),
/// and a pole of q-order zero (at most one n) is kept as the scalar
/// denominator 1 - sign zeta^e of the result. The q offset is integral.
PrefixedSeries bilateral_expand(const BilateralSpec& spec, int order);

/// Same, as a plain series through q^order; requires a non-negative lowest
/// exponent and no uncleared denominator.
Series<ZetaLaurent> bilateral_series(const BilateralSpec& spec, int order);

/// Smallest q-exponent reached by the n-th summand of the spec (pole
/// expansion included).
int bilateral_term_order(const BilateralSpec& spec, int n);

/// eta(k tau) = q^{k/24} (q^k;q^k)_inf.
PrefixedSeries eta(int k, int order);

/// theta(arg; k tau) = sum_{nu in 1/2 + Z} e^{pi i nu^2 k tau + 2 pi i nu (arg + 1/2)}.
PrefixedSeries theta(const EllipticArg& arg, int k, int order);
/// The triple-product form -i Q^{1/8} X^{-1/2} (Q, X, X^{-1}Q; Q)_inf with
/// Q = q^k and X = e^{2 pi i arg}.
PrefixedSeries theta_product(const EllipticArg& arg, int k, int order);

/// Zwegers' mu(u, v; k tau).
PrefixedSeries mu(const EllipticArg& u, const EllipticArg& v, int k, int order);

/// Level-l Appell function A_l(u, v; k tau).
PrefixedSeries appell(int level, const EllipticArg& u, const EllipticArg& v, int k, int order);

}  // namespace unimodal
