#include "unimodal/named.hpp"

#include <algorithm>

#include "unimodal/gf.hpp"

namespace unimodal {

namespace {

const ZetaLaurent z = ZetaLaurent::monomial(1);

Series<ZetaLaurent> constant_in_zeta(const Series<BigInt>& s) {
  Series<ZetaLaurent> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r[n] = ZetaLaurent(s[n]);
  return r;
}

}  // namespace

const std::vector<std::string>& named_keys() {
  static const std::vector<std::string> keys = {"P",     "U",      "Uzeta",   "R",    "Rbar", "Rbar2",
                                                "R2",    "Ubar",   "Ubar2",   "U2",   "Ubar-q", "Ubar2-q",
                                                "U2-q",  "eta",    "theta",   "mu",   "appell"};
  return keys;
}

bool is_named_key(std::string_view key) {
  const auto& k = named_keys();
  return std::find(k.begin(), k.end(), key) != k.end();
}

NamedValue build_named(std::string_view key, int order, const NamedOptions& opts) {
  if (order < 0) throw Error(ErrorKind::domain, "order must be non-negative");
  if (key == "P") return constant_in_zeta(build_P<BigInt>(order));
  if (key == "U") return constant_in_zeta(at_zeta_one(build_U(z, order)));
  if (key == "Uzeta") return build_U(z, order);
  if (key == "R") return build_R(Monomial<ZetaLaurent>{z, 0}, 1, order);
  if (key == "Rbar") return build_Rbar(z, order);
  if (key == "Rbar2") return build_Rbar2(z, order);
  if (key == "R2") return build_R2(z, order);
  if (key == "Ubar") return build_Ubar(z, order);
  if (key == "Ubar2") return build_Ubar2(z, order);
  if (key == "U2") return build_U2(z, order);
  if (key == "Ubar-q") return negate_q(build_Ubar(z, order));
  if (key == "Ubar2-q") return negate_q(build_Ubar2(z, order));
  if (key == "U2-q") return negate_q(build_U2(z, order));
  if (key == "eta") return eta(opts.scale, order);
  if (key == "theta") return theta(opts.u, opts.scale, order);
  if (key == "mu") return mu(opts.u, opts.v, opts.scale, order);
  if (key == "appell") return appell(opts.level, opts.u, opts.v, opts.scale, order);
  throw Error(ErrorKind::unknown_series, "no series named '" + std::string(key) + "'");
}

}  // namespace unimodal
