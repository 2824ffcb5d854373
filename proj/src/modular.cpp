#include "unimodal/modular.hpp"

#include <cctype>
#include <sstream>

namespace unimodal {

namespace {

int mod4(int a) { return ((a % 4) + 4) % 4; }

[[noreturn]] void unsupported(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::unsupported_specialization, "argument '" + std::string(text) + "': " + why);
}

int exponent(const BilateralSpec& s, int n) {
  const long long twice = static_cast<long long>(s.quad2) * n * n + static_cast<long long>(s.lin2) * n;
  return static_cast<int>(twice / 2) + s.constant;
}

ZetaLaurent signed_zeta(bool negative, int e) { return ZetaLaurent::monomial(e, negative ? -1 : 1); }

}  // namespace

Monomial<ZetaLaurent> EllipticArg::exp2() const {
  return {signed_zeta(half % 2 != 0, zeta), tau};
}

std::string EllipticArg::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](int c, const char* sym) {
    if (c == 0) return;
    if (c < 0) os << "-";
    else if (!first) os << "+";
    if (std::abs(c) != 1) os << std::abs(c);
    os << sym;
    first = false;
  };
  term(zeta, "z");
  term(tau, "tau");
  if (half != 0) {
    if (half < 0) os << "-";
    else if (!first) os << "+";
    if (std::abs(half) % 2 == 0) os << std::abs(half) / 2;
    else os << std::abs(half) << "/2";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

EllipticArg parse_elliptic_arg(std::string_view text) {
  EllipticArg arg;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) unsupported(text, "empty");
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      unsupported(text, "expected + or -");
    }
    long num = 1;
    bool have_num = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      num = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num = num * 10 + (s[i++] - '0');
      have_num = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    if (s.compare(i, 3, "tau") == 0) {
      arg.tau += sign * static_cast<int>(num);
      i += 3;
    } else if (i < s.size() && s[i] == 'z') {
      arg.zeta += sign * static_cast<int>(num);
      ++i;
    } else if (have_num && i < s.size() && s[i] == '/') {
      ++i;
      long den = 0;
      bool have_den = false;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        den = den * 10 + (s[i++] - '0');
        have_den = true;
      }
      if (!have_den || (den != 1 && den != 2)) unsupported(text, "only halves are supported");
      arg.half += sign * static_cast<int>(den == 2 ? num : 2 * num);
    } else if (have_num) {
      arg.half += sign * static_cast<int>(2 * num);
    } else {
      unsupported(text, "not of the form a*z + b*tau + c/2");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') unsupported(text, "not a monomial specialization");
  }
  return arg;
}

int bilateral_term_order(const BilateralSpec& spec, int n) {
  int e = exponent(spec, n);
  if (spec.pole) {
    const int k = spec.pole->step * n + spec.pole->offset;
    if (k < 0) e -= k;
  }
  return e;
}

PrefixedSeries bilateral_expand(const BilateralSpec& spec, int order) {
  if (spec.quad2 <= 0) throw Error(ErrorKind::divergent_spec, "quadratic exponent must be positive");
  if (spec.pole && spec.pole->step <= 0) throw Error(ErrorKind::divergent_spec, "pole step must be positive");
  if ((spec.quad2 + spec.lin2) % 2 != 0) throw Error(ErrorKind::domain, "exponent is not integral");
  if (spec.pole && spec.pole->sign != 1 && spec.pole->sign != -1)
    throw Error(ErrorKind::domain, "pole sign must be +1 or -1");

  // The per-term lowest exponent is convex in n, so walk to its minimum.
  int n0 = -spec.lin2 / (2 * spec.quad2);
  auto m = [&](int n) { return bilateral_term_order(spec, n); };
  while (m(n0 - 1) < m(n0)) --n0;
  while (m(n0 + 1) < m(n0)) ++n0;
  const int base = m(n0);
  const int top = base + order;

  Series<ZetaLaurent> rest(order), held(order);
  bool cleared = false;
  ZetaLaurent d = 1;
  auto add_term = [&](int n) {
    const int e = exponent(spec, n);
    const bool neg = spec.alternating && (n % 2 != 0);
    const ZetaLaurent c = signed_zeta(neg, spec.zeta_step * n);
    if (!spec.pole) {
      if (e <= top) rest[e - base] += c;
      return;
    }
    const auto& p = *spec.pole;
    const int k = p.step * n + p.offset;
    if (k > 0) {
      for (int r = 0; e + k * r <= top; ++r)
        rest[e + k * r - base] += c * signed_zeta(p.sign < 0 && r % 2 != 0, p.zeta_exp * r);
    } else if (k < 0) {
      for (int r = 1; e - k * r <= top; ++r)
        rest[e - k * r - base] -= c * signed_zeta(p.sign < 0 && r % 2 != 0, -p.zeta_exp * r);
    } else {
      if (p.zeta_exp == 0 && p.sign == 1)
        throw Error(ErrorKind::singular_pochhammer, "pole 1 - q^0 at n = " + std::to_string(n));
      d = ZetaLaurent(1) - signed_zeta(p.sign < 0, p.zeta_exp);
      cleared = true;
      if (e <= top) held[e - base] += c;
    }
  };
  for (int n = n0; m(n) <= top; --n) add_term(n);
  for (int n = n0 + 1; m(n) <= top; ++n) add_term(n);

  PrefixedSeries out;
  out.q24 = 24 * base;
  if (cleared) {
    rest *= d;
    out.body = rest + held;
    out.den = d;
  } else {
    out.body = std::move(rest);
  }
  return out;
}

Series<ZetaLaurent> bilateral_series(const BilateralSpec& spec, int order) {
  PrefixedSeries p = bilateral_expand(spec, order);
  if (p.q24 < 0) throw Error(ErrorKind::domain, "bilateral sum has negative q-powers");
  // Known through q^{base + order}; report exactly through q^order.
  return p.to_integral().truncated(order);
}

PrefixedSeries eta(int k, int order) {
  if (k <= 0) throw Error(ErrorKind::domain, "eta scale must be positive");
  return PrefixedSeries(pochhammer<ZetaLaurent>({ZetaLaurent(1), k}, kInfinity, order, k), 0, k, 0);
}

PrefixedSeries theta(const EllipticArg& arg, int k, int order) {
  if (k <= 0) throw Error(ErrorKind::domain, "theta scale must be positive");
  BilateralSpec spec;
  spec.alternating = (1 + arg.half) % 2 != 0;
  spec.quad2 = k;
  spec.lin2 = k + 2 * arg.tau;
  spec.zeta_step = arg.zeta;
  PrefixedSeries body = bilateral_expand(spec, order);
  body.zeta_half += arg.zeta;
  body.q24 += 3 * k + 12 * arg.tau;
  body.unit_tag = mod4(1 + arg.half);
  return body;
}

PrefixedSeries theta_product(const EllipticArg& arg, int k, int order) {
  if (k <= 0) throw Error(ErrorKind::domain, "theta scale must be positive");
  const auto x = arg.exp2();
  const Monomial<ZetaLaurent> xinv{unit_inverse(x.coeff), -x.q_exp};
  QProduct<ZetaLaurent> prod;
  const Monomial<ZetaLaurent> base{1, k};
  prod.times({1, k}, base, kInfinity).times(x, base, kInfinity).times({xinv.coeff, xinv.q_exp + k}, base, kInfinity);
  const int v = prod.valuation();
  Laurent<ZetaLaurent> l = prod.expand(v + order);
  PrefixedSeries out(std::move(l.body), -arg.zeta, 3 * k - 12 * arg.tau + 24 * l.valuation, 3 - arg.half);
  return out;
}

namespace {

BilateralSpec::Pole pole_for(const EllipticArg& u, int k) {
  return {u.half % 2 != 0 ? -1 : 1, u.zeta, k, u.tau};
}

}  // namespace

PrefixedSeries mu(const EllipticArg& u, const EllipticArg& v, int k, int order) {
  if (k <= 0) throw Error(ErrorKind::domain, "mu scale must be positive");
  PrefixedSeries th = theta(v, k, order);
  if (th.body.is_zero()) throw Error(ErrorKind::theta_zero, "theta(" + v.to_string() + ") vanishes identically");
  BilateralSpec spec;
  spec.alternating = (1 + v.half) % 2 != 0;
  spec.quad2 = k;
  spec.lin2 = k + 2 * v.tau;
  spec.zeta_step = v.zeta;
  spec.pole = pole_for(u, k);
  PrefixedSeries sum = bilateral_expand(spec, order);
  sum.zeta_half += u.zeta;
  sum.q24 += 12 * u.tau;
  sum.unit_tag = mod4(u.half);
  return sum * th.inverse();
}

PrefixedSeries appell(int level, const EllipticArg& u, const EllipticArg& v, int k, int order) {
  if (level <= 0) throw Error(ErrorKind::domain, "Appell level must be positive");
  if (k <= 0) throw Error(ErrorKind::domain, "Appell scale must be positive");
  BilateralSpec spec;
  spec.alternating = (level + v.half) % 2 != 0;
  spec.quad2 = level * k;
  spec.lin2 = level * k + 2 * v.tau;
  spec.zeta_step = v.zeta;
  spec.pole = pole_for(u, k);
  PrefixedSeries sum = bilateral_expand(spec, order);
  sum.zeta_half += level * u.zeta;
  sum.q24 += 12 * level * u.tau;
  sum.unit_tag = mod4(level * u.half);
  return sum;
}

}  // namespace unimodal
