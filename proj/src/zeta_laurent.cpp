#include "unimodal/zeta_laurent.hpp"

#include <algorithm>
#include <sstream>

#include "unimodal/error.hpp"

namespace unimodal {

ZetaLaurent::ZetaLaurent(long c) {
  if (c != 0) terms_.emplace_back(0, BigInt(c));
}

ZetaLaurent::ZetaLaurent(const BigInt& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

ZetaLaurent ZetaLaurent::monomial(int exponent, const BigInt& c) {
  if (c == 0) return {};
  return ZetaLaurent(std::vector<Term>{{exponent, c}});
}

ZetaLaurent ZetaLaurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return ZetaLaurent(std::move(out));
}

bool ZetaLaurent::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool ZetaLaurent::is_unit() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

bool ZetaLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

BigInt ZetaLaurent::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int ZetaLaurent::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::domain, "min_exponent of zero Laurent polynomial");
  return terms_.front().first;
}

int ZetaLaurent::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::domain, "max_exponent of zero Laurent polynomial");
  return terms_.back().first;
}

ZetaLaurent ZetaLaurent::shifted(int k) const {
  ZetaLaurent r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

ZetaLaurent ZetaLaurent::conjugate() const {
  std::vector<Term> out(terms_.rbegin(), terms_.rend());
  for (auto& t : out) t.first = -t.first;
  return ZetaLaurent(std::move(out));
}

ZetaLaurent ZetaLaurent::sign_twisted() const {
  ZetaLaurent r = *this;
  for (auto& t : r.terms_)
    if (t.first % 2 != 0) t.second = -t.second;
  return r;
}

BigInt ZetaLaurent::at_one() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

BigInt ZetaLaurent::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
  return g;
}

namespace {

// Merge two sorted term lists with a sign on the second.
std::vector<ZetaLaurent::Term> merge(const std::vector<ZetaLaurent::Term>& a,
                                     std::span<const ZetaLaurent::Term> b, bool subtract) {
  std::vector<ZetaLaurent::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? BigInt(-b[j].second) : b[j].second);
      ++j;
    } else {
      BigInt c = subtract ? BigInt(a[i].second - b[j].second) : BigInt(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ZetaLaurent& ZetaLaurent::operator+=(const ZetaLaurent& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

ZetaLaurent& ZetaLaurent::operator-=(const ZetaLaurent& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

ZetaLaurent& ZetaLaurent::operator*=(const ZetaLaurent& other) {
  *this = *this * other;
  return *this;
}

ZetaLaurent& ZetaLaurent::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

ZetaLaurent operator-(ZetaLaurent a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

ZetaLaurent operator*(const ZetaLaurent& a, const ZetaLaurent& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const ZetaLaurent& mono = a.terms_.size() == 1 ? a : b;
    const ZetaLaurent& other = a.terms_.size() == 1 ? b : a;
    const auto& [e, c] = mono.terms_[0];
    std::vector<ZetaLaurent::Term> out;
    out.reserve(other.terms_.size());
    for (const auto& t : other.terms_) out.emplace_back(t.first + e, t.second * c);
    return ZetaLaurent(std::move(out));
  }
  ZetaLaurent r;
  r.add_product(a, b);
  return r;
}

void ZetaLaurent::add_product(const ZetaLaurent& a, const ZetaLaurent& b) {
  if (a.terms_.empty() || b.terms_.empty()) return;
  const int lo = a.terms_.front().first + b.terms_.front().first;
  const int hi = a.terms_.back().first + b.terms_.back().first;
  int out_lo = lo, out_hi = hi;
  if (!terms_.empty()) {
    out_lo = std::min(out_lo, terms_.front().first);
    out_hi = std::max(out_hi, terms_.back().first);
  }
  std::vector<BigInt> dense(static_cast<std::size_t>(out_hi - out_lo + 1));
  for (auto& t : terms_) dense[t.first - out_lo] = std::move(t.second);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      mpz_addmul(dense[ea + eb - out_lo].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  terms_.clear();
  for (int e = out_lo; e <= out_hi; ++e) {
    auto& c = dense[e - out_lo];
    if (c != 0) terms_.emplace_back(e, std::move(c));
  }
}

std::string ZetaLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    BigInt a = abs(c);
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "z";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::optional<ZetaLaurent> exact_divide(const ZetaLaurent& a, const ZetaLaurent& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return ZetaLaurent{};
  if (b.is_unit()) return a * unit_inverse(b);
  const int a0 = a.min_exponent(), b0 = b.min_exponent();
  const int da = a.max_exponent() - a0, db = b.max_exponent() - b0;
  if (da < db) return std::nullopt;
  // Dense long division from the top; b's constant term is non-zero so
  // Laurent divisibility reduces to polynomial divisibility.
  std::vector<BigInt> rem(static_cast<std::size_t>(da + 1)), den(static_cast<std::size_t>(db + 1));
  for (const auto& [e, c] : a.terms()) rem[e - a0] = c;
  for (const auto& [e, c] : b.terms()) den[e - b0] = c;
  std::vector<ZetaLaurent::Term> quotient;
  const BigInt& lead = den[db];
  for (int k = da - db; k >= 0; --k) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    BigInt qc;
    mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (int j = 0; j <= db; ++j)
      if (den[j] != 0) mpz_submul(rem[k + j].get_mpz_t(), qc.get_mpz_t(), den[j].get_mpz_t());
    quotient.emplace_back(k + a0 - b0, std::move(qc));
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return ZetaLaurent::from_terms(std::move(quotient));
}

ZetaLaurent unit_inverse(const ZetaLaurent& u) {
  if (!u.is_unit()) throw Error(ErrorKind::not_invertible, "ζ-Laurent " + u.to_string() + " is not a unit");
  const auto& [e, c] = u.terms()[0];
  return ZetaLaurent::monomial(-e, c);
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::order_mismatch: return "order-mismatch";
    case ErrorKind::not_invertible: return "not-invertible";
    case ErrorKind::singular_pochhammer: return "singular-pochhammer";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::lattice_mismatch: return "lattice-mismatch";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::divergent_spec: return "divergent-spec";
    case ErrorKind::unsupported_specialization: return "unsupported-specialization";
    case ErrorKind::theta_zero: return "theta-zero";
    case ErrorKind::unknown_identity: return "unknown-identity";
    case ErrorKind::domain: return "domain";
    case ErrorKind::uncertified_factorization: return "uncertified-factorization";
    case ErrorKind::uncleared_denominator: return "uncleared-denominator";
    case ErrorKind::bailey_relation: return "bailey-relation";
    case ErrorKind::unknown_series: return "unknown-series";
  }
  return "unknown";
}

}  // namespace unimodal
