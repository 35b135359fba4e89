#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cjp/degree.hpp"
#include "cjp/io.hpp"
#include "cjp/pretzel.hpp"
#include "cjp/verify.hpp"

namespace py = pybind11;
using namespace cjp;

namespace {

// (exponent, coefficient) pairs with both as exact rational strings.
std::vector<std::pair<std::string, std::string>> terms(const HalfLaurent& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& [e, c] : p.terms()) out.emplace_back(rational_to_string(frac(e, 2)), rational_to_string(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Colored Jones polynomials of pretzel knots (exact)";
  // Later registrations are tried first, so the base class goes in first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<RegimeError>(m, "RegimeError", base);

  m.def("qint", [](int n) { return terms(qint(n)); }, py::arg("n"));
  m.def(
      "colored_jones",
      [](const std::vector<int>& w, int N, const std::string& method) {
        if (method == "statesum") return terms(pretzel::colored_jones_statesum(pretzel::PretzelSpec(w), N));
        if (method == "bracket") {
          pretzel::PretzelSpec spec(w);  // same validation as the state sum
          return terms(pretzel::colored_jones_bracket(spec.w, N));
        }
        throw DomainError("method must be statesum or bracket");
      },
      py::arg("w"), py::arg("N"), py::arg("method") = "statesum");
  m.def("writhe", [](const std::vector<int>& w) { return pretzel::PretzelSpec(w).writhe(); });
  m.def("delta", [](int n, const std::vector<int>& k, const std::vector<int>& w) {
    return rational_to_string(degree::delta(n, k, w));
  });
  m.def("delta_sign", [](int n, const std::vector<int>& k, const std::vector<int>& w) { return degree::delta_sign(n, k, w); });
  m.def("predicted_degree", [](const std::vector<int>& w, int N) { return rational_to_string(degree::predicted_degree(w, N)); });
  m.def(
      "degree_report_json",
      [](const std::vector<int>& w, const std::vector<int>& colors, int exact_max) {
        degree::FitOptions fo;
        fo.exact_max_color = exact_max;
        return io::to_json(degree::empirical_degree_fit(w, colors, fo)).dump();
      },
      py::arg("w"), py::arg("colors"), py::arg("exact_max") = 4);
  m.def(
      "run_check",
      [](int id, const std::string& level) {
        verify::VerifyOptions o;
        o.level = level == "full" ? verify::Level::Full : verify::Level::Fast;
        auto r = verify::run_check(id, o);
        return std::make_pair(r.pass, r.detail);
      },
      py::arg("id"), py::arg("level") = "fast");
}
