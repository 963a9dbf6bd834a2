#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sojourn/cli.hpp"
#include "sojourn/golden.hpp"
#include "sojourn/serialize.hpp"

namespace py = pybind11;
using namespace sojourn;

namespace {

std::vector<std::vector<std::string>> matrix_strings(const Mat2& m) {
  return {{m(0, 0).to_string(), m(0, 1).to_string()}, {m(1, 0).to_string(), m(1, 1).to_string()}};
}

QubitState state_or_default(const std::optional<std::string>& text) {
  return text ? parse_state(*text) : QubitState::phi_star();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact sojourn-time distributions of the Hadamard walk over Q(sqrt 2)";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);

  py::class_<Qr2>(m, "Qr2")
      .def(py::init<>())
      .def(py::init<long>())
      .def(py::init([](const std::string& text) { return Qr2::parse(text); }))
      .def_property_readonly("rat", [](const Qr2& x) { return x.rat().get_str(); })
      .def_property_readonly("rad", [](const Qr2& x) { return x.rad().get_str(); })
      .def("conjugate", &Qr2::conjugate)
      .def("norm", &Qr2::norm)
      .def("inverse", &Qr2::inverse)
      .def("sign", &Qr2::sign)
      .def("__float__", &Qr2::to_double)
      .def("__str__", &Qr2::to_string)
      .def("__repr__", [](const Qr2& x) { return "Qr2('" + x.to_string() + "')"; })
      .def("__eq__", [](const Qr2& a, const Qr2& b) { return a == b; })
      .def("__lt__", [](const Qr2& a, const Qr2& b) { return a < b; })
      .def("__hash__", [](const Qr2& x) { return py::hash(py::str(x.to_string())); })
      .def("__add__", [](const Qr2& a, const Qr2& b) { return a + b; })
      .def("__sub__", [](const Qr2& a, const Qr2& b) { return a - b; })
      .def("__mul__", [](const Qr2& a, const Qr2& b) { return a * b; })
      .def("__truediv__", [](const Qr2& a, const Qr2& b) { return a / b; })
      .def("__neg__", [](const Qr2& a) { return -a; });
  py::implicitly_convertible<long, Qr2>();

  m.def("psi", [](int n, int k, int start) { return matrix_strings(SojournTable::evolve(start, n).psi(n, k)); },
        py::arg("n"), py::arg("k"), py::arg("start") = 0, "Psi^start_n(k) as a 2x2 list of exact strings");
  m.def("gamma", [](int n, int k) { return matrix_strings(SojournTable::evolve(0, n).gamma(n, k)); }, py::arg("n"),
        py::arg("k"), "Gamma_n(k) as a 2x2 list of exact strings");
  m.def("pqrs", [](int n, int k) {
        PqrsCoeffs c = pqrs_decompose(SojournTable::evolve(0, n).psi(n, k));
        return std::vector<std::string>{c.p.to_string(), c.q.to_string(), c.r.to_string(), c.s.to_string()};
      },
      py::arg("n"), py::arg("k"));

  m.def("expand_json", [](int theorem, int order) { return expand_document(theorem, order).dump(); },
        py::arg("theorem"), py::arg("order"));
  m.def("dp_json", [](int start, int n_max) { return dp_document(start, n_max).dump(); }, py::arg("start"),
        py::arg("n_max"));
  m.def("measure_json",
        [](const std::string& kind, int n, const std::optional<std::string>& state) {
          return measure_document(parse_measure_kind(kind), n, state_or_default(state)).dump();
        },
        py::arg("kind"), py::arg("n"), py::arg("state") = py::none());
  m.def("first_return_json", [](int n_max) { return first_return_document(n_max).dump(); }, py::arg("n_max"));

  m.def("verify",
        [](int order) {
          std::ostringstream out;
          int code = run_verify(order, default_golden_dir(), out);
          return py::make_tuple(code, out.str());
        },
        py::arg("order") = 12, "Returns (exit code, report text)");
  m.def("run",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = sojourn::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Command-line entry point; returns (exit code, stdout, stderr)");
}
