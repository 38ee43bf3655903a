#include "planar_gw/cli.hpp"
#include "planar_gw/cohom_ring.hpp"
#include "planar_gw/gw_table.hpp"
#include "planar_gw/p2_oracle.hpp"
#include "planar_gw/qh_series.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace planar_gw;

namespace {

// One memo per interpreter; write-once entries make sharing it harmless.
gw::MemoTable& module_memo() {
  static gw::MemoTable memo;
  return memo;
}

py::object to_py(const Rational& x) {
  if (is_integer(x)) return py::int_(py::str(to_string(x)));
  return py::module_::import("fractions").attr("Fraction")(to_string(x));
}

py::object to_py(const BigInt& x) { return py::int_(py::str(to_string(x))); }

// Accepts int, Fraction or "p/q" strings.
Rational from_py(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

ring::BasisIndex to_basis(std::pair<int, int> ij) {
  if (!ring::BasisIndex::in_range(ij.first, ij.second)) throw py::value_error("basis index out of range");
  return {ij.first, ij.second};
}

py::list matrix_to_py(const ring::Matrix12& m) {
  py::list rows;
  for (const auto& r : m) {
    py::list row;
    for (const auto& x : r) row.append(to_py(x));
    rows.append(row);
  }
  return rows;
}

py::list class_to_py(const ring::CohClass& c) {
  py::list rows;
  for (int i = 0; i <= ring::kMaxAExp; ++i) {
    py::list row;
    for (int j = 0; j <= ring::kMaxHExp; ++j) row.append(to_py(c(i, j)));
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact genus-0 invariants of planar curves in P^3 and the quantum cohomology checks behind them.";

  py::class_<ring::CohClass>(m, "CohClass")
      .def(py::init<>())
      .def_static("basis", [](int i, int j) { return ring::CohClass::basis(i, j); })
      .def_static("monomial", &ring::CohClass::monomial, py::arg("a_exp"), py::arg("h_exp"))
      .def("coeff", [](const ring::CohClass& c, int i, int j) { return to_py(c(i, j)); })
      .def("coefficients", &class_to_py)
      .def("is_zero", &ring::CohClass::is_zero)
      .def("integrate", [](const ring::CohClass& c) { return to_py(ring::integrate(c)); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def("__mul__", [](const ring::CohClass& x, const ring::CohClass& y) { return x * y; })
      .def("scale", [](const ring::CohClass& x, const py::handle& c) { return x * from_py(c); })
      .def(py::self == py::self)
      .def("__repr__", [](const ring::CohClass& c) {
        std::ostringstream os;
        os << "CohClass(";
        bool first = true;
        for (int k = 0; k < ring::kBasisSize; ++k) {
          if (c.coefficients()[k] == 0) continue;
          os << (first ? "" : " + ") << to_string(c.coefficients()[k]) << "*"
             << ring::basis_name(ring::BasisIndex::from_flat(k));
          first = false;
        }
        os << (first ? "0)" : ")");
        return os.str();
      });

  m.def("reduce", [](const std::vector<std::tuple<int, int, py::object>>& raw) {
    std::vector<ring::Monomial> terms;
    for (const auto& [a, h, c] : raw) terms.push_back({a, h, from_py(c)});
    return ring::reduce(terms);
  }, py::arg("monomials"), "Normal form of a list of (a_exp, h_exp, coeff) terms.");
  m.def("pairing_matrix", [] { return matrix_to_py(ring::shared_pairing().g); });
  m.def("inverse_pairing", [] { return matrix_to_py(ring::shared_pairing().ginv); });
  m.def("dual_basis", [] {
    py::list out;
    for (const auto& c : ring::dual_basis()) out.append(c);
    return out;
  });
  m.def("diagonal", [] { return matrix_to_py(ring::diagonal().delta); });

  m.def("expected_codim", &gw::expected_codim, py::arg("d"), py::arg("n"));
  m.def("binomial", [](int n, int k) { return to_py(gw::binomial(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("n_planar", [](int d, int r, int s, int theta) { return to_py(gw::n_planar({d, r, s, theta}, module_memo())); },
        py::arg("d"), py::arg("r"), py::arg("s"), py::arg("theta"));
  m.def("reduce_point_insertion",
        [](int d, int r, int s, int theta) {
          return to_py(gw::reduce_point_insertion({d, r, s, theta}, module_memo()));
        },
        py::arg("d"), py::arg("r"), py::arg("s"), py::arg("theta"));
  m.def("gw_invariant",
        [](int d, int theta_total, const std::vector<int>& insertions) {
          return to_py(gw::gw_invariant(d, theta_total, insertions, module_memo()));
        },
        py::arg("d"), py::arg("theta_total"), py::arg("insertions"));
  m.def("full_table", [](int d_max) {
    py::list out;
    for (const auto& [k, v] : gw::full_table(d_max, module_memo())) {
      out.append(py::make_tuple(py::make_tuple(k.d, k.r, k.s, k.theta), to_py(v)));
    }
    return out;
  }, py::arg("d_max"));
  m.def("save_cache", [](const std::string& path) { gw::save_cache(path, module_memo()); }, py::arg("path"));
  m.def("load_cache", [](const std::string& path) { return gw::load_cache(path, module_memo()); }, py::arg("path"));

  m.def("kontsevich", [](int d) { return to_py(p2::kontsevich(d)); }, py::arg("d"));

  m.def("phi3_classical", &qh::phi3_classical);
  m.def("quantum_basis_product",
        [](std::pair<int, int> u, std::pair<int, int> v, int d_max) {
          qh::QuantumCohomology qc(d_max, module_memo());
          py::list out;
          for (const auto& c : qc.basis_product(to_basis(u), to_basis(v)).components) out.append(c);
          return out;
        },
        py::arg("u"), py::arg("v"), py::arg("d_max"),
        "Components by q-degree of T_u * T_v.");
  m.def("wdvv_pairing_check",
        [](std::pair<int, int> i, std::pair<int, int> j, std::pair<int, int> k, std::pair<int, int> l, int d_max) {
          return qh::wdvv_pairing_check(to_basis(i), to_basis(j), to_basis(k), to_basis(l), d_max, module_memo());
        },
        py::arg("i"), py::arg("j"), py::arg("k"), py::arg("l"), py::arg("d_max"));
  m.def("wdvv1_coefficient_identity", [](int d, int r, int s, int theta) {
    const auto rep = qh::wdvv1_coefficient_identity({d, r, s, theta}, module_memo());
    py::dict out;
    out["ok"] = rep.ok;
    out["lhs"] = to_py(rep.lhs);
    out["rhs"] = to_py(rep.rhs);
    out["table_value"] = to_py(rep.table_value);
    return out;
  }, py::arg("d"), py::arg("r"), py::arg("s"), py::arg("theta"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line front end in-process; returns (exit_code, stdout, stderr).");

  m.attr("__version__") = "0.1.0";
}
