#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncalg/cli.hpp"
#include "ncalg/groebner.hpp"
#include "ncalg/quadratic.hpp"
#include "ncalg/sklyanin.hpp"
#include "ncalg/text.hpp"

namespace py = pybind11;

namespace {

ncalg::Presentation load(const std::string& text) {
  return ncalg::parse_presentation(text).presentation;
}

ncalg::ParamTriple triple(const std::string& p, const std::string& q, const std::string& r,
                          const std::string& field) {
  const auto f = ncalg::parse_field(field);
  return {ncalg::parse_scalar(p, f), ncalg::parse_scalar(q, f), ncalg::parse_scalar(r, f)};
}

}  // namespace

PYBIND11_MODULE(_ncalg, m) {
  m.doc() = "Groebner bases and Hilbert series of graded algebras";

  static py::exception<ncalg::Error> error(m, "NcalgError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ncalg::Error& e) {
      py::set_error(error, (std::string(ncalg::to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("hilbert_series",
        [](const std::string& text, std::size_t degree) {
          const auto p = load(text);
          return ncalg::complete(p, std::max(degree, p.max_relation_degree())).hilbert_coeffs(degree);
        },
        py::arg("text"), py::arg("degree"));

  m.def("groebner_basis",
        [](const std::string& text, std::size_t degree) {
          const auto p = load(text);
          std::vector<std::pair<std::string, std::string>> out;
          const auto gb = ncalg::complete(p, degree);
          for (const auto& g : gb.elements())
            out.emplace_back(ncalg::render_word(g.leading_word(), p.generators),
                             ncalg::render_poly(g, p.generators));
          return out;
        },
        py::arg("text"), py::arg("degree"));

  m.def("graded_dim",
        [](const std::string& text, std::size_t d) { return ncalg::graded_dim_oracle(load(text), d); },
        py::arg("text"), py::arg("degree"));

  m.def("koszul_defect",
        [](const std::string& text, std::size_t degree) {
          return ncalg::koszul_defect(ncalg::QuadraticAlgebra(load(text)), degree);
        },
        py::arg("text"), py::arg("degree"));

  m.def("classify",
        [](const std::string& p, const std::string& q, const std::string& r,
           const std::string& field) {
          const auto c = ncalg::classify(triple(p, q, r, field));
          py::dict params;
          if (c.alpha) params["alpha"] = c.alpha->to_string();
          if (c.a) params["a"] = c.a->to_string();
          if (c.b) params["b"] = c.b->to_string();
          return py::make_tuple(ncalg::to_string(c.tag), params);
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("field") = "Q(w)");

  m.def("orbit",
        [](const std::string& a, const std::string& b, const std::string& field) {
          const auto f = ncalg::parse_field(field);
          std::vector<std::pair<std::string, std::string>> out;
          for (const auto& pt : ncalg::iso_group_orbit(ncalg::parse_scalar(a, f), ncalg::parse_scalar(b, f)))
            out.emplace_back(pt.a.to_string(), pt.b.to_string());
          return out;
        },
        py::arg("a"), py::arg("b"), py::arg("field") = "Q(w)");

  m.def("run",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int status = ncalg::run_command(args, out, err);
          return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"), "Runs one command-line invocation; returns (status, stdout, stderr).");
}
