#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgap/gfs.hpp"
#include "qgap/partitions.hpp"
#include "qgap/qseries.hpp"
#include "qgap/verify.hpp"

namespace py = pybind11;

namespace {

using qgap::Family;
using qgap::Int;
using qgap::QSeries;

py::object to_py_int(const Int& v) {
    const std::string digits = v.get_str();
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::list series_to_list(const QSeries& s) {
    py::list out;
    for (int i = 0; i <= s.order(); ++i) out.append(to_py_int(s[i]));
    return out;
}

py::dict report_to_dict(const qgap::VerdictReport& r) {
    const py::object loads = py::module_::import("json").attr("loads");
    return loads(r.to_json());
}

Family parse_family(const std::string& name) { return qgap::family_from_name(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact missing-integer statistics for partitions and overpartitions";

    // series
    m.def("partition_count", [](int nmax) { return series_to_list(qgap::partition_count_series(nmax)); },
          py::arg("nmax"), "p(0..nmax)");
    m.def("overpartition_count",
          [](int nmax) { return series_to_list(qgap::overpartition_count_series(nmax)); },
          py::arg("nmax"), "pbar(0..nmax)");
    m.def("parity_diff",
          [](const std::string& family, int nmax) {
              return series_to_list(qgap::gf_parity_diff(parse_family(family), nmax));
          },
          py::arg("family"), py::arg("nmax"), "M_e(n) - M_o(n) for n in 0..nmax");
    m.def("gapfree",
          [](const std::string& family, int nmax) {
              return series_to_list(qgap::gf_gapfree(parse_family(family), nmax));
          },
          py::arg("family"), py::arg("nmax"));
    m.def("one_missing",
          [](const std::string& family, int nmax) {
              return series_to_list(qgap::gf_one_missing(parse_family(family), nmax));
          },
          py::arg("family"), py::arg("nmax"));
    m.def("nu_d_lt_k",
          [](int k, int nmax) { return series_to_list(qgap::gf_nu_d_lt_k(k, nmax)); },
          py::arg("k"), py::arg("nmax"));

    m.def("missing_table",
          [](const std::string& family, int j, int nmax) {
              const qgap::WQPoly table = qgap::gf_missing_table({parse_family(family), j, nmax});
              py::list rows;
              for (int n = 0; n <= nmax; ++n) {
                  for (int m = 0; m <= (n == 0 ? 0 : n - 1); ++m) {
                      if (table.coeff(m, n) != 0) {
                          rows.append(py::make_tuple(n, m, to_py_int(table.coeff(m, n))));
                      }
                  }
              }
              return rows;
          },
          py::arg("family"), py::arg("j"), py::arg("nmax"),
          "nonzero (n, m, count) rows of the missing-integer table");

    // enumeration and per-partition statistics
    m.def("enumerate_partitions",
          [](int n) {
              py::list out;
              qgap::enumerate_partitions(n, [&](const qgap::Partition& p) {
                  out.append(py::cast(p.parts()));
                  return true;
              });
              return out;
          },
          py::arg("n"), "all partitions of n in reverse-lexicographic order");
    m.def("enumerate_overpartitions",
          [](int n) {
              py::list out;
              qgap::enumerate_overpartitions(n, [&](const qgap::Overpartition& p) {
                  py::list entries;
                  for (const auto& e : p.entries()) {
                      entries.append(py::make_tuple(e.value, e.multiplicity, e.overlined));
                  }
                  out.append(entries);
                  return true;
              });
              return out;
          },
          py::arg("n"), "overpartitions of n as (value, multiplicity, overlined) entries");
    m.def("missing_count",
          [](const std::vector<int>& parts, int j) {
              return qgap::missing_count(qgap::Partition(parts), j);
          },
          py::arg("parts"), py::arg("j") = 1);
    m.def("missing_values",
          [](const std::vector<int>& parts, int j) {
              return qgap::missing_values(qgap::Partition(parts), j);
          },
          py::arg("parts"), py::arg("j") = 1);
    m.def("mex",
          [](const std::vector<int>& parts, int j) { return qgap::mex(qgap::Partition(parts), j); },
          py::arg("parts"), py::arg("j") = 1);
    m.def("maex",
          [](const std::vector<int>& parts) { return qgap::maex(qgap::Partition(parts)); },
          py::arg("parts"));
    m.def("stats",
          [](const std::vector<int>& parts, int j, int k) {
              const qgap::StatRecord r = qgap::stat_record(qgap::Partition(parts), j, k);
              py::dict d;
              d["largest"] = r.largest;
              d["missing_count"] = r.missing_count;
              d["mex"] = r.mex;
              d["maex"] = r.maex ? py::cast(*r.maex) : py::none();
              d["nu_d_lt_k"] = r.nu_d_lt_k;
              d["nu_d_geq_k"] = r.nu_d_geq_k;
              d["total_parts"] = r.total_parts;
              d["distinct_values"] = r.distinct_values;
              return d;
          },
          py::arg("parts"), py::arg("j") = 1, py::arg("k") = 1,
          "per-partition statistics as a dict");

    // checks: each returns the verdict report as a dict
    m.def("verify_mod3", [](int nmax) { return report_to_dict(qgap::check_congruence_mod3(nmax)); },
          py::arg("nmax"));
    m.def("verify_mod4", [](int nmax) { return report_to_dict(qgap::check_congruence_mod4(nmax)); },
          py::arg("nmax"));
    m.def("scan_bias",
          [](const std::string& family, int nmax) {
              return report_to_dict(qgap::scan_bias(parse_family(family), nmax));
          },
          py::arg("family"), py::arg("nmax"));
    m.def("scan_bound_vs_distinct",
          [](int nmax) { return report_to_dict(qgap::scan_bound_vs_distinct(nmax)); },
          py::arg("nmax"));
    m.def("crosscheck_missing_tables",
          [](const std::string& family, int j, int nmax) {
              return report_to_dict(qgap::crosscheck_missing_tables(parse_family(family), j, nmax));
          },
          py::arg("family"), py::arg("j"), py::arg("nmax"));
    m.def("crosscheck_one_double",
          [](const std::string& family, int nmax) {
              return report_to_dict(qgap::crosscheck_one_double(parse_family(family), nmax));
          },
          py::arg("family"), py::arg("nmax"));
    m.def("crosscheck_nu_identity",
          [](int kmax, int nmax) { return report_to_dict(qgap::crosscheck_nu_identity(kmax, nmax)); },
          py::arg("kmax"), py::arg("nmax"));
    m.def("check_preliminaries",
          [](int order) { return report_to_dict(qgap::check_preliminaries(order)); },
          py::arg("order"));
}
