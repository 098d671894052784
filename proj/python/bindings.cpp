#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hesspave/paving.hpp"
#include "hesspave/report.hpp"

namespace py = pybind11;
using namespace hesspave;

namespace {

HessenbergFunction resolve_h(const std::optional<std::string>& h, int n) {
  return h ? parse_hessenberg(*h, n) : HessenbergFunction::springer(n);
}

py::tuple run(const std::string& command, const std::string& lambda, const std::optional<std::string>& h,
              const std::optional<int>& q, int budget_bits, const std::optional<std::uint64_t>& seed,
              const std::string& format, int workers, const std::optional<std::string>& w,
              const std::optional<std::string>& tableau, const std::optional<std::string>& trace) {
  RunConfig cfg;
  cfg.command = parse_command(command);
  cfg.lambda_spec = lambda;
  cfg.h_spec = h.value_or("");
  cfg.q = q;
  cfg.budget_bits = budget_bits;
  cfg.seed = seed;
  cfg.format = parse_format(format);
  cfg.workers = workers;
  cfg.w_spec = w;
  cfg.tableau_spec = tableau;
  cfg.trace_spec = trace;
  CommandOutput out;
  {
    py::gil_scoped_release release;
    out = run_command(cfg);
  }
  return py::make_tuple(out.exit_code, out.body);
}

}  // namespace

PYBIND11_MODULE(_hesspave, m) {
  m.doc() = "Affine pavings of type A Hessenberg varieties";
  m.attr("__version__") = HESSPAVE_VERSION;
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("run", &run, py::arg("command"), py::arg("lambda_"), py::arg("h") = std::nullopt,
        py::arg("q") = std::nullopt, py::arg("budget_bits") = kDefaultBudgetBits, py::arg("seed") = std::nullopt,
        py::arg("format") = "json", py::arg("workers") = 1, py::arg("w") = std::nullopt,
        py::arg("tableau") = std::nullopt, py::arg("trace") = std::nullopt,
        "Run one CLI command in process; returns (exit_code, body).");

  m.def(
      "cells",
      [](const std::vector<int>& lambda, const std::optional<std::string>& h, int workers) {
        const Composition shape(lambda);
        py::list out;
        for (const auto& c : enumerate_cells(shape, resolve_h(h, shape.size()), workers)) {
          py::list inv;
          for (const auto& p : c.hess_inversions.pairs()) inv.append(py::make_tuple(p.high, p.low));
          py::dict d;
          d["w"] = c.w.word();
          d["tableau"] = c.tableau.rows();
          d["inversions"] = inv;
          d["dim"] = c.dim;
          out.append(d);
        }
        return out;
      },
      py::arg("lambda_"), py::arg("h") = std::nullopt, py::arg("workers") = 1);

  m.def(
      "poincare",
      [](const std::vector<int>& lambda, const std::optional<std::string>& h) {
        const Composition shape(lambda);
        return poincare(shape, resolve_h(h, shape.size())).coeffs;
      },
      py::arg("lambda_"), py::arg("h") = std::nullopt, "Cell counts by dimension.");

  m.def(
      "r0",
      [](const std::vector<int>& lambda, const std::optional<std::string>& h)
          -> std::optional<std::vector<std::vector<int>>> {
        const Composition shape(lambda);
        const auto t = r0_tableau(shape, resolve_h(h, shape.size()));
        if (!t) return std::nullopt;
        return t->rows();
      },
      py::arg("lambda_"), py::arg("h") = std::nullopt);

  m.def(
      "tableau_of",
      [](const std::vector<int>& w, const std::vector<int>& lambda) {
        return tableau_of(Permutation(w), Composition(lambda)).rows();
      },
      py::arg("w"), py::arg("lambda_"));

  m.def(
      "point_count",
      [](const std::vector<int>& lambda, const std::optional<std::string>& h, int q, int budget_bits, int workers) {
        const Composition shape(lambda);
        const auto hf = resolve_h(h, shape.size());
        CountReport rep;
        {
          py::gil_scoped_release release;
          rep = variety_point_count(shape, hf, FieldSpec(q), budget_bits, workers);
        }
        py::dict d;
        d["q"] = rep.q;
        d["total"] = rep.total;
        d["predicted"] = rep.predicted;
        d["match"] = rep.match;
        return d;
      },
      py::arg("lambda_"), py::arg("h") = std::nullopt, py::arg("q") = 2, py::arg("budget_bits") = kDefaultBudgetBits,
      py::arg("workers") = 1);
}
