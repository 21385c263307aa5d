#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "affmaps/geometry.hpp"
#include "affmaps/pipeline.hpp"
#include "affmaps/poly.hpp"

namespace py = pybind11;
using namespace affmaps;

namespace {

DecomposeOptions options(bool pure, std::optional<std::size_t> max_codim, bool greedy, unsigned threads, bool degrees) {
  DecomposeOptions o;
  o.enumeration.pure_dimension = pure;
  o.enumeration.max_codim = max_codim;
  o.enumeration.greedy = greedy;
  o.enumeration.threads = threads;
  o.degrees = degrees;
  return o;
}

std::string decompose_json(const std::string& text, bool pure, std::optional<std::size_t> max_codim, bool greedy,
                           unsigned threads, bool degrees, bool timing) {
  System s = parse_system(text);
  DecompositionReport r;
  {
    py::gil_scoped_release release;
    r = decompose(s, options(pure, max_codim, greedy, threads, degrees));
  }
  return to_json(r, timing, -1);
}

std::string initial_form_text(const std::string& text, const std::vector<std::optional<std::string>>& weight) {
  System s = parse_system(text);
  if (s.polynomials.size() != 1) throw std::invalid_argument("expected exactly one polynomial");
  if (weight.size() != s.variable_count()) throw std::invalid_argument("weight length differs from variable count");
  WeightVector w;
  for (const auto& x : weight) {
    if (!x) w.emplace_back();
    else {
      Rational q(*x);
      q.canonicalize();
      w.emplace_back(q);
    }
  }
  return serialize(initial_form(s.polynomials[0], w), s.variables);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("decompose_json", &decompose_json, py::arg("text"), py::arg("pure") = false,
        py::arg("max_codim") = py::none(), py::arg("greedy") = false, py::arg("threads") = 1,
        py::arg("degrees") = true, py::arg("timing") = false);
  m.def("adjacent_minors", [](std::size_t rows, std::size_t cols) { return serialize(gen_adjacent_minors(rows, cols)); },
        py::arg("rows"), py::arg("cols"));
  m.def("initial_form", &initial_form_text, py::arg("text"), py::arg("weight"));
  m.def(
      "bench_scaling",
      [](std::size_t n_max, unsigned threads, double min_seconds) {
        std::vector<std::tuple<std::size_t, std::size_t, double>> out;
        py::gil_scoped_release release;
        for (const auto& r : bench_scaling(n_max, threads, min_seconds)) out.emplace_back(r.n, r.components, r.seconds);
        return out;
      },
      py::arg("n_max"), py::arg("threads") = 1, py::arg("min_seconds") = 0.2);
}
