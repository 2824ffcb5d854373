#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unimodal/asymptotics.hpp"
#include "unimodal/enumerators.hpp"
#include "unimodal/identities.hpp"
#include "unimodal/named.hpp"
#include "unimodal/parity.hpp"

namespace py = pybind11;
using namespace unimodal;

namespace {

py::object to_py(const BigInt& v) { return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10)); }

// {m: c} for one zeta-Laurent coefficient.
py::dict zeta_dict(const ZetaLaurent& c) {
  py::dict d;
  for (const auto& [m, coeff] : c.terms()) d[py::int_(m)] = to_py(coeff);
  return d;
}

Family parse_family(const std::string& name) {
  const auto f = family_from_string(name);
  if (!f) throw Error(ErrorKind::domain, "unknown family '" + name + "'");
  return *f;
}

py::object expand(const std::string& key, int order, bool zeta, const std::string& u, const std::string& v, int scale,
                  int level) {
  NamedOptions opts;
  opts.u = parse_elliptic_arg(u);
  opts.v = parse_elliptic_arg(v);
  opts.scale = scale;
  opts.level = level;
  const NamedValue value = build_named(key, order, opts);
  if (const auto* pre = std::get_if<PrefixedSeries>(&value)) {
    py::list body;
    for (int n = 0; n <= pre->body.order(); ++n) body.append(zeta_dict(pre->body[n]));
    py::dict out;
    out["zeta_half"] = pre->zeta_half;
    out["q24"] = pre->q24;
    out["unit_tag"] = pre->unit_tag;
    out["denominator"] = zeta_dict(pre->den);
    out["body"] = body;
    return out;
  }
  const auto& s = std::get<Series<ZetaLaurent>>(value);
  py::list out;
  for (int n = 0; n <= s.order(); ++n) out.append(zeta ? py::object(zeta_dict(s[n])) : to_py(s[n].at_one()));
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["key"] = r.key;
  d["passed"] = r.pass;
  d["order"] = r.order;
  d["pairs"] = r.pairs;
  d["notes"] = r.notes;
  d["error"] = r.error.empty() ? py::object(py::none()) : py::object(py::str(r.error));
  if (r.mismatch) {
    py::dict m;
    m["label"] = r.mismatch->label;
    m["m"] = r.mismatch->m;
    m["n"] = r.mismatch->n;
    m["lhs"] = r.mismatch->lhs;
    m["rhs"] = r.mismatch->rhs;
    d["mismatch"] = m;
  } else {
    d["mismatch"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-series expansions, enumerators and identity checks for unimodal sequences";

  // Held for the life of the process; the translator may run after module init.
  static PyObject* unimodal_error = PyErr_NewException("unimodal._core.UnimodalError", PyExc_ValueError, nullptr);
  m.attr("UnimodalError") = py::handle(unimodal_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(unimodal_error)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(unimodal_error, exc.ptr());
    }
  });

  m.def("series_keys", &named_keys);
  m.def("expand", &expand, py::arg("key"), py::arg("order"), py::arg("zeta") = false, py::arg("u") = "z",
        py::arg("v") = "1/2", py::arg("scale") = 1, py::arg("level") = 2,
        "Coefficients through q^order. With zeta=True each entry is a {m: c} dict. "
        "Modular keys return a dict with the prefix and the body.");

  m.def("families", [] {
    std::vector<std::string> out;
    for (Family f : kAllFamilies) out.emplace_back(to_string(f));
    return out;
  });
  m.def("count", [](const std::string& family, int n) { return count(parse_family(family), n); }, py::arg("family"),
        py::arg("n"));
  m.def("count_by_rank", [](const std::string& family, int n) { return count_by_rank(parse_family(family), n); },
        py::arg("family"), py::arg("n"));
  m.attr("ENUMERATION_LIMIT") = kEnumerationLimit;

  m.def("identity_keys", [] {
    std::vector<std::string> out;
    for (const auto& r : identity_catalog()) out.push_back(r.key);
    return out;
  });
  m.def("verify", [](const std::string& key, int order) { return report_dict(verify(key, order)); }, py::arg("key"),
        py::arg("order") = -1);
  m.def(
      "verify_all",
      [](int order, unsigned threads) {
        std::vector<VerificationReport> reports;
        {
          py::gil_scoped_release release;
          reports = verify_all(order, threads);
        }
        py::list out;
        for (const auto& r : reports) out.append(report_dict(r));
        return out;
      },
      py::arg("order") = -1, py::arg("threads") = 0);

  m.def(
      "parity_scan",
      [](std::int64_t max_n, unsigned threads) {
        std::vector<ParityRow> rows;
        {
          py::gil_scoped_release release;
          rows = parity_scan(max_n, threads);
        }
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["n"] = r.n;
          d["u2_mod2"] = static_cast<int>(r.definition_bit);
          d["rep_count"] = r.reps;
          d["predicate"] = r.predicate;
          d["agree"] = r.agree();
          out.append(d);
        }
        return out;
      },
      py::arg("max_n"), py::arg("threads") = 0);
  m.def("rep_count", &rep_count, py::arg("m"));

  m.def(
      "exact_counts",
      [](const std::string& target, int n) {
        const auto s = exact_counts(parse_growth_target(target), n);
        py::list out;
        for (int i = 0; i <= s.order(); ++i) out.append(to_py(s[i]));
        return out;
      },
      py::arg("target"), py::arg("n"));
  m.def(
      "ratio_report",
      [](const std::string& target, const std::vector<int>& checkpoints) {
        const RatioReport rep = ratio_report(parse_growth_target(target), checkpoints);
        py::list rows;
        for (const auto& r : rep.rows) {
          py::dict d;
          d["n"] = r.n;
          d["ratio"] = r.ratio;
          d["deviation"] = r.deviation;
          d["log_ratio"] = r.log_ratio;
          rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["deviation_decreasing"] = rep.deviation_decreasing;
        out["log_ratio_within_2pct"] = rep.log_ratio_within_2pct;
        out["log_main_within_2pct"] = rep.log_main_within_2pct;
        return out;
      },
      py::arg("target"), py::arg("checkpoints"));
}
