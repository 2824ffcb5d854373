#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unimodal/modular.hpp"

namespace unimodal {

/// Arguments for the modular keys. theta uses `u`; mu and appell use both.
struct NamedOptions {
  EllipticArg u{1, 0, 0};
  EllipticArg v{0, 0, 1};
  int scale = 1;
  int level = 2;
};

using NamedValue = std::variant<Series<ZetaLaurent>, PrefixedSeries>;

/// The stable series keys, in documentation order.
const std::vector<std::string>& named_keys();

bool is_named_key(std::string_view key);

/// Conventions:
///   P        1/(q;q)_inf
///   U        U(1;q), strongly unimodal sequences (zeta-sum of Uzeta)
///   Uzeta    U(zeta;q)
///   R        R(zeta;q), partitions by rank
///   Rbar, Rbar2, R2, Ubar, Ubar2, U2   the two-variable series at zeta
///   Ubar-q, Ubar2-q, U2-q              the same with q -> -q
///   eta      eta(scale tau);  theta  theta(u; scale tau)
///   mu       mu(u, v; scale tau);  appell  A_level(u, v; scale tau)
/// Unknown keys raise unknown-series.
NamedValue build_named(std::string_view key, int order, const NamedOptions& opts = {});

}  // namespace unimodal
