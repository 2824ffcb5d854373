#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unimodal/asymptotics.hpp"
#include "unimodal/enumerators.hpp"
#include "unimodal/identities.hpp"
#include "unimodal/named.hpp"
#include "unimodal/parity.hpp"

using namespace unimodal;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Order used when --order is absent; UNIMODAL_DEFAULT_ORDER overrides it.
int default_order() {
  if (const char* env = std::getenv("UNIMODAL_DEFAULT_ORDER")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring invalid UNIMODAL_DEFAULT_ORDER='" << env << "'\n";
  }
  return 20;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// zeta^m q^n coefficients of one series row, skipping zeros.
void zeta_rows(const ZetaLaurent& c, int n, const std::function<void(int, int, const BigInt&)>& emit) {
  for (const auto& [m, coeff] : c.terms()) emit(m, n, coeff);
}

// ---------------------------------------------------------------------------
// expand

struct ExpandArgs {
  std::string series;
  std::optional<int> order;
  bool zeta = false;
  std::string format = "json";
  std::string u = "z", v = "1/2";
  int scale = 1;
  int level = 2;
};

int run_expand(const ExpandArgs& a) {
  if (!is_named_key(a.series)) throw UsageError("unknown series '" + a.series + "'");
  const int order = a.order.value_or(default_order());
  if (order < 0) throw UsageError("order must be non-negative");
  NamedOptions opts;
  opts.u = parse_elliptic_arg(a.u);
  opts.v = parse_elliptic_arg(a.v);
  opts.scale = a.scale;
  opts.level = a.level;
  const NamedValue value = build_named(a.series, order, opts);

  const Series<ZetaLaurent>* body = nullptr;
  const PrefixedSeries* pre = std::get_if<PrefixedSeries>(&value);
  if (pre) {
    body = &pre->body;
  } else {
    body = &std::get<Series<ZetaLaurent>>(value);
  }
  // Prefixed series are always written zeta-refined: their zeta-sum is not
  // meaningful with a half-integral zeta offset.
  const bool zeta = a.zeta || pre != nullptr;

  if (a.format == "csv") {
    std::cout << "key,m,n,coefficient\n";
    for (int n = 0; n <= body->order(); ++n) {
      if (zeta) {
        zeta_rows((*body)[n], n, [&](int m, int nn, const BigInt& c) {
          std::cout << a.series << ',' << m << ',' << nn << ',' << c.get_str() << '\n';
        });
      } else {
        std::cout << a.series << ",," << n << ',' << (*body)[n].at_one().get_str() << '\n';
      }
    }
    return kExitPass;
  }
  if (a.format != "json") throw UsageError("format must be json or csv");
  json out;
  out["series"] = a.series;
  out["order"] = order;
  json coeffs = json::array();
  for (int n = 0; n <= body->order(); ++n) {
    if (zeta) {
      zeta_rows((*body)[n], n, [&](int m, int nn, const BigInt& c) {
        coeffs.push_back({{"m", m}, {"n", nn}, {"c", c.get_str()}});
      });
    } else {
      coeffs.push_back((*body)[n].at_one().get_str());
    }
  }
  out["coefficients"] = std::move(coeffs);
  if (pre) {
    // value = i^unit_tag zeta^(zeta_half/2) q^(q24/24) * body / denominator
    out["prefix"] = {{"zeta_half", pre->zeta_half}, {"q24", pre->q24}, {"unit_tag", pre->unit_tag}};
    out["denominator"] = pre->den.to_string();
  }
  std::cout << out.dump() << '\n';
  return kExitPass;
}

// ---------------------------------------------------------------------------
// count

int run_count(const std::string& family_name, int n, bool by_rank, const std::string& format) {
  const auto family = family_from_string(family_name);
  if (!family) throw UsageError("unknown family '" + family_name + "'");
  if (n < 0 || n > kEnumerationLimit) throw UsageError("n must be in [0, " + std::to_string(kEnumerationLimit) + "]");
  if (format == "csv") {
    std::cout << "key,m,n,coefficient\n";
    if (by_rank) {
      for (auto [m, c] : count_by_rank(*family, n)) std::cout << family_name << ',' << m << ',' << n << ',' << c << '\n';
    } else {
      std::cout << family_name << ",," << n << ',' << count(*family, n) << '\n';
    }
    return kExitPass;
  }
  json out = {{"family", family_name}, {"n", n}, {"count", std::to_string(count(*family, n))}};
  if (by_rank) {
    json ranks = json::array();
    for (auto [m, c] : count_by_rank(*family, n)) ranks.push_back({{"m", m}, {"c", std::to_string(c)}});
    out["by_rank"] = std::move(ranks);
  }
  std::cout << out.dump() << '\n';
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

json report_json(const VerificationReport& r) {
  json j = {{"key", r.key}, {"pass", r.pass}, {"order", r.order}, {"pairs", r.pairs}, {"notes", r.notes}};
  if (r.mismatch)
    j["mismatch"] = {{"label", r.mismatch->label}, {"m", r.mismatch->m}, {"n", r.mismatch->n},
                     {"lhs", r.mismatch->lhs}, {"rhs", r.mismatch->rhs}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

int run_verify(const std::vector<std::string>& keys, bool all, std::optional<int> order_opt, unsigned threads,
               const std::string& format, bool timing) {
  if (!all && keys.empty()) throw UsageError("give --all or at least one --key");
  const int order = order_opt.value_or(-1);
  std::vector<VerificationReport> reports;
  if (all) {
    reports = verify_all(order, threads);
  } else {
    for (const auto& k : keys) {
      try {
        (void)find_identity(k);
      } catch (const Error&) {
        throw UsageError("unknown identity '" + k + "'");
      }
      reports.push_back(verify(k, order));
    }
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    json out = {{"pass", ok}, {"reports", std::move(arr)}};
    std::cout << out.dump() << '\n';
  } else if (format == "text") {
    for (const auto& r : reports) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.key << " through q^" << r.order << " (" << r.pairs << " pairs)";
      if (r.mismatch)
        std::cout << " first mismatch in '" << r.mismatch->label << "' at zeta^" << r.mismatch->m << " q^"
                  << r.mismatch->n;
      if (!r.error.empty()) std::cout << " error: " << r.error;
      std::cout << '\n';
    }
  } else {
    throw UsageError("format must be json or text");
  }
  // Timings go to stderr so the data payload stays byte-stable.
  if (timing)
    for (const auto& r : reports) std::cerr << r.key << ": " << r.elapsed_ms << " ms\n";
  return ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// parity

int run_parity(std::int64_t max_n, const std::string& emit, unsigned threads) {
  if (max_n < 1) throw UsageError("--max-n must be positive");
  const auto rows = parity_scan(max_n, threads);
  std::size_t bad = 0;
  for (const auto& r : rows) bad += !r.agree();
  if (emit == "csv") {
    std::cout << "n,u2_mod2,half_rep_count_mod2,predicate,agree\n";
    for (const auto& r : rows)
      std::cout << r.n << ',' << r.definition_bit << ',' << ((r.reps / 2) % 2) << ',' << r.predicate << ','
                << r.agree() << '\n';
  } else if (emit == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"n", r.n},
                     {"u2_mod2", static_cast<int>(r.definition_bit)},
                     {"half_rep_count_mod2", static_cast<int>((r.reps / 2) % 2)},
                     {"predicate", r.predicate},
                     {"agree", r.agree()}});
    json out = {{"max_n", max_n}, {"disagreements", bad}, {"rows", std::move(arr)}};
    std::cout << out.dump() << '\n';
  } else if (emit == "summary") {
    std::cout << "n <= " << max_n << ": " << bad << " disagreements\n";
  } else {
    throw UsageError("--emit must be csv, json or summary");
  }
  return bad == 0 ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// asym

int run_asym(const std::string& target_name, const std::vector<int>& checkpoints, const std::string& emit) {
  GrowthTarget t;
  try {
    t = parse_growth_target(target_name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (checkpoints.empty()) throw UsageError("no checkpoints");
  int top = 1;
  for (int n : checkpoints) {
    if (n < 1 || n > kCountGuard) throw UsageError("checkpoints must lie in [1, " + std::to_string(kCountGuard) + "]");
    top = std::max(top, n);
  }
  const Series<BigInt> counts = exact_counts(t, top);
  const RatioReport rep = ratio_report(t, checkpoints, counts);
  const auto decrease = first_decrease(counts);
  if (emit == "json") {
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"n", r.n},
                      {"count", counts[r.n].get_str()},
                      {"ratio", r.ratio},
                      {"deviation", r.deviation},
                      {"log_ratio", r.log_ratio}});
    json out = {{"target", target_name},
                {"rows", std::move(rows)},
                {"deviation_decreasing", rep.deviation_decreasing},
                {"log_ratio_within_2pct", rep.log_ratio_within_2pct},
                {"log_main_within_2pct", rep.log_main_within_2pct},
                {"monotone_through", top}};
    out["first_decrease"] = decrease ? json(*decrease) : json(nullptr);
    std::cout << out.dump() << '\n';
  } else if (emit == "text") {
    for (const auto& r : rep.rows)
      std::cout << "n=" << r.n << " ratio=" << r.ratio << " |ratio-1|=" << r.deviation
                << " log(count)/exponent=" << r.log_ratio << '\n';
    std::cout << "deviation decreasing: " << (rep.deviation_decreasing ? "yes" : "no") << '\n';
    std::cout << "monotone through " << top << ": " << (decrease ? "no" : "yes") << '\n';
  } else {
    throw UsageError("--emit must be json or text");
  }
  // Exit status follows the convergence trend and monotonicity; the log-ratio
  // flags are reported only.
  return rep.deviation_decreasing && !decrease ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// scan-nonneg

int run_scan(const std::string& family, int max_n, bool enumerate_objects, const std::string& emit) {
  std::map<std::string, std::pair<std::string, Family>> families = {
      {"ubar", {"Ubar", Family::left_heavy_overlined}},
      {"ubar2", {"Ubar2-q", Family::m2_left_heavy_overlined}},
      {"u2", {"U2-q", Family::m2_left_heavy}}};
  const auto it = families.find(family);
  if (it == families.end()) throw UsageError("--family must be ubar, ubar2 or u2");
  if (max_n < 0) throw UsageError("--max-n must be non-negative");
  std::vector<std::tuple<int, int, BigInt>> negatives;
  if (enumerate_objects) {
    if (max_n > kEnumerationLimit) throw UsageError("enumeration is capped at n = " + std::to_string(kEnumerationLimit));
    for (int n = 0; n <= max_n; ++n)
      for (auto [m, c] : count_by_rank(it->second.second, n))
        if (c < 0) negatives.emplace_back(m, n, BigInt(static_cast<long>(c)));
  } else {
    const auto s = std::get<Series<ZetaLaurent>>(build_named(it->second.first, max_n));
    for (int n = 0; n <= max_n; ++n)
      zeta_rows(s[n], n, [&](int m, int nn, const BigInt& c) {
        if (c < 0) negatives.emplace_back(m, nn, c);
      });
  }
  if (emit == "json") {
    json arr = json::array();
    for (const auto& [m, n, c] : negatives) arr.push_back({{"m", m}, {"n", n}, {"c", c.get_str()}});
    json out = {{"family", family}, {"max_n", max_n}, {"method", enumerate_objects ? "enumeration" : "series"},
                {"negatives", std::move(arr)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << family << " through n=" << max_n << ": " << negatives.size() << " negative coefficients\n";
    for (const auto& [m, n, c] : negatives) std::cout << "  m=" << m << " n=" << n << " c=" << c.get_str() << '\n';
  }
  // A report, not a check.
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series toolkit for unimodal sequence generating functions"};
  app.require_subcommand(1);

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "Expand a named series");
  expand->add_option("--series", ex.series, "Series key")->required();
  expand->add_option("--order", ex.order, "Highest q-power (default: $UNIMODAL_DEFAULT_ORDER or 20)");
  expand->add_flag("--zeta", ex.zeta, "Keep the zeta refinement");
  expand->add_option("--format", ex.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  expand->add_option("--u", ex.u, "First elliptic argument for theta, mu, appell");
  expand->add_option("--v", ex.v, "Second elliptic argument for mu, appell");
  expand->add_option("--scale", ex.scale, "k in k*tau for the modular keys")->check(CLI::PositiveNumber);
  expand->add_option("--level", ex.level, "Appell level")->check(CLI::PositiveNumber);

  std::string family, format = "json";
  int n = 0;
  bool by_rank = false;
  auto* cnt = app.add_subcommand("count", "Count objects of one family by exhaustion");
  cnt->add_option("--family", family, "Family name")->required();
  cnt->add_option("--n", n, "Size")->required();
  cnt->add_flag("--by-rank", by_rank, "Split by rank");
  cnt->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> keys;
  bool all = false, timing = false;
  std::optional<int> vorder;
  unsigned threads = 0;
  std::string vformat = "text";
  auto* ver = app.add_subcommand("verify", "Verify catalog identities");
  ver->add_option("--key", keys, "Identity key (repeatable)");
  ver->add_flag("--all", all, "Every catalog entry");
  ver->add_option("--order", vorder, "Compare through q^order (default: each entry's own)");
  ver->add_option("--threads", threads, "Worker threads (0 = hardware)");
  ver->add_option("--format", vformat, "text or json")->check(CLI::IsMember({"text", "json"}));
  ver->add_flag("--timing", timing, "Print timings on stderr");

  std::int64_t max_n = 1000;
  std::string emit = "summary";
  auto* par = app.add_subcommand("parity", "Scan the parity of u2(n)");
  par->add_option("--max-n", max_n, "Largest n")->check(CLI::Range(std::int64_t{1}, std::int64_t{1000000}));
  par->add_option("--emit", emit, "csv, json or summary")->check(CLI::IsMember({"csv", "json", "summary"}));
  par->add_option("--threads", threads, "Worker threads (0 = hardware)");

  std::string target = "u2bar", aemit = "text";
  std::vector<int> checkpoints = {500, 1000, 2000};
  auto* asy = app.add_subcommand("asym", "Compare exact counts with their main terms");
  asy->add_option("--target", target, "p, u, u2bar or u2");
  asy->add_option("--checkpoints", checkpoints, "Comma-separated n values")->delimiter(',');
  asy->add_option("--emit", aemit, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string sfamily = "ubar", semit = "text";
  int smax = 40;
  bool senum = false;
  auto* scan = app.add_subcommand("scan-nonneg", "Look for negative rank coefficients");
  scan->add_option("--family", sfamily, "ubar, ubar2 or u2");
  scan->add_option("--max-n", smax, "Largest n");
  scan->add_flag("--enumerate", senum, "Use exhaustive enumeration instead of the series");
  scan->add_option("--emit", semit, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*expand) return run_expand(ex);
    if (*cnt) return run_count(family, n, by_rank, format);
    if (*ver) return run_verify(keys, all, vorder, threads, vformat, timing);
    if (*par) return run_parity(max_n, emit, threads);
    if (*asy) return run_asym(target, checkpoints, aemit);
    if (*scan) return run_scan(sfamily, smax, senum, semit);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool usage = e.kind() == ErrorKind::unsupported_specialization || e.kind() == ErrorKind::size_limit ||
                       e.kind() == ErrorKind::unknown_series || e.kind() == ErrorKind::unknown_identity ||
                       e.kind() == ErrorKind::domain;
    return usage ? kExitUsage : kExitFail;
  }
  return kExitUsage;
}
