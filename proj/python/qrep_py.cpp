#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qrep/certify.hpp"
#include "qrep/cli.hpp"
#include "qrep/errors.hpp"
#include "qrep/hermitian.hpp"
#include "qrep/report.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact certificates for quantum representations";

  // Later registrations are tried first, so the base class goes first.
  auto& error = py::register_exception<qrep::Error>(m, "QrepError", PyExc_ValueError);
  py::register_exception<qrep::ParseError>(m, "ParseError", error.ptr());
  py::register_exception<qrep::NonHyperbolic>(m, "NonHyperbolic", error.ptr());

  m.attr("__version__") = qrep::kVersion;

  m.def("quantum_integer_sign", [](std::int64_t n, std::int64_t p, std::int64_t ell) {
    return qrep::to_int(qrep::quantum_integer_sign(n, p, ell));
  }, py::arg("n"), py::arg("p"), py::arg("ell") = 1);

  m.def("twist_eigenvalue", [](int a, int p, std::int64_t ell) {
    const qrep::RootOfUnity z = qrep::twist_eigenvalue(a, p, ell);
    return std::make_pair(z.order(), z.exponent());
  }, py::arg("a"), py::arg("p"), py::arg("ell") = 1, "Returns (order, exponent).");
  m.def("twist_order", &qrep::twist_order, py::arg("a"), py::arg("p"));

  m.def("tadpole_basis", &qrep::tadpole_basis, py::arg("tail"), py::arg("p"));
  m.def("block_dimension", [](const std::string& spec, int p) {
    return qrep::block_dimension(qrep::parse_graph(spec), p);
  }, py::arg("graph"), py::arg("p"));

  m.def("gram_signs", [](int p, std::int64_t ell) {
    return qrep::gram_profile(p, ell).pattern();
  }, py::arg("p"), py::arg("ell"));
  m.def("find_indefinite_ell", &qrep::find_indefinite_ell, py::arg("p"));

  m.def("burau_closure", [](std::int64_t minus_q_order, std::size_t cap) {
    const qrep::ClosureResult r = qrep::burau_closure_oracle(-qrep::RootOfUnity(minus_q_order, 1), cap);
    return std::make_pair(r.finite, r.order);
  }, py::arg("minus_q_order"), py::arg("cap") = 5000);

  m.def("count_orbits", &qrep::count_orbits, py::arg("g"), py::arg("n"), py::arg("labeled") = false);

  // Structured results travel as the same JSON the command-line tool prints.
  m.def("_certificate_json", [](int p) { return qrep::certificate_json(qrep::certify_level(p)).dump(); });
  m.def("_veech_json", [](const std::string& spec) {
    return qrep::veech_json(qrep::parse_configuration(spec)).dump();
  });
  m.def("_orbits_json", [](int g, int n, bool labeled) { return qrep::orbits_json(g, n, labeled).dump(); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = qrep::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
