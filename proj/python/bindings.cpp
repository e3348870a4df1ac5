#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "infpot/analysis.hpp"
#include "infpot/fd_oracle.hpp"
#include "infpot/field.hpp"
#include "infpot/minimax.hpp"
#include "infpot/series.hpp"
#include "infpot/verify.hpp"

namespace py = pybind11;
using namespace infpot;

namespace {

Theta2Form parse_form(const std::string& form) {
    if (form == "series") return Theta2Form::Series;
    if (form == "product") return Theta2Form::Product;
    throw DomainError("form must be 'series' or 'product'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Explicit infinity-potential of the punctured square";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<TruncationError>(m, "TruncationError", PyExc_ArithmeticError);
    py::register_exception<CornerSingularityError>(m, "CornerSingularityError",
                                                   PyExc_ArithmeticError);
    py::register_exception<BracketError>(m, "BracketError", PyExc_ArithmeticError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<SingularHessianError>(m, "SingularHessianError",
                                                 PyExc_ArithmeticError);
    py::register_exception<UndefinedValueError>(m, "UndefinedValueError", PyExc_ValueError);

    py::class_<SeriesPolicy>(m, "SeriesPolicy")
        .def(py::init<>())
        .def_readwrite("abs_tol", &SeriesPolicy::abs_tol)
        .def_readwrite("max_terms", &SeriesPolicy::max_terms)
        .def_readwrite("boundary_snap", &SeriesPolicy::boundary_snap);

    py::class_<SolverPolicy>(m, "SolverPolicy")
        .def(py::init<>())
        .def_readwrite("root_tol", &SolverPolicy::root_tol)
        .def_readwrite("max_iter", &SolverPolicy::max_iter)
        .def_readwrite("bracket_shrink", &SolverPolicy::bracket_shrink);

    py::class_<MinimaxResult>(m, "MinimaxResult")
        .def_readonly("r", &MinimaxResult::r_star)
        .def_readonly("theta", &MinimaxResult::theta_star)
        .def_readonly("u", &MinimaxResult::u)
        .def_readonly("inner_iters", &MinimaxResult::inner_iters)
        .def_readonly("outer_iters", &MinimaxResult::outer_iters)
        .def_readonly("residual_r", &MinimaxResult::residual_r)
        .def_readonly("residual_theta", &MinimaxResult::residual_theta)
        .def_readonly("corner_limit", &MinimaxResult::corner_limit)
        .def("__repr__", [](const MinimaxResult& r) {
            return "MinimaxResult(r=" + std::to_string(r.r_star) +
                   ", theta=" + std::to_string(r.theta_star) +
                   ", u=" + std::to_string(r.u) + ")";
        });

    py::class_<DisproofReport>(m, "DisproofReport")
        .def_readonly("r_grid", &DisproofReport::r_grid)
        .def_readonly("d_values", &DisproofReport::d_values)
        .def_readonly("r_max", &DisproofReport::r_max)
        .def_readonly("d_max", &DisproofReport::d_max)
        .def_readonly("s0", &DisproofReport::s0)
        .def_readonly("lambda_defect", &DisproofReport::lambda_defect);

    m.def("eval_W",
          [](double r, double theta, const SeriesPolicy& pol) {
              return eval_W({r, theta}, pol);
          },
          py::arg("r"), py::arg("theta"), py::arg("policy") = SeriesPolicy{});
    m.def("eval_W_partials",
          [](double r, double theta, const SeriesPolicy& pol) {
              const WPartials wp = eval_W_partials({r, theta}, pol);
              return py::make_tuple(wp.W_r, wp.W_theta, wp.W_rr, wp.W_rtheta);
          },
          py::arg("r"), py::arg("theta"), py::arg("policy") = SeriesPolicy{},
          "returns (W_r, W_theta, W_rr, W_rtheta)");
    m.def("eval_U",
          [](double r, double theta, const SeriesPolicy& pol) {
              return eval_U({r, theta}, pol);
          },
          py::arg("r"), py::arg("theta"), py::arg("policy") = SeriesPolicy{});
    m.def("eval_U_theta",
          [](double r, double theta, const SeriesPolicy& pol) {
              return eval_U_theta({r, theta}, pol);
          },
          py::arg("r"), py::arg("theta"), py::arg("policy") = SeriesPolicy{});
    m.def("theta2",
          [](double z, double q, const std::string& form, const SeriesPolicy& pol) {
              return eval_theta2(z, q, parse_form(form), pol);
          },
          py::arg("z"), py::arg("q"), py::arg("form") = "series",
          py::arg("policy") = SeriesPolicy{});
    m.def("ur_diagonal",
          [](double r, const std::string& form, const SeriesPolicy& pol) {
              return eval_Ur_diagonal(r, pol, parse_form(form));
          },
          py::arg("r"), py::arg("form") = "product", py::arg("policy") = SeriesPolicy{});

    m.def("solve_minimax",
          [](double x, double y, const SolverPolicy& sp, const SeriesPolicy& pol) {
              return solve_minimax({x, y}, sp, pol);
          },
          py::arg("x"), py::arg("y"), py::arg("solver") = SolverPolicy{},
          py::arg("series") = SeriesPolicy{});

    m.def("eval_u", [](double x, double y) { return eval_u({x, y}); },
          py::arg("x"), py::arg("y"));
    m.def("eval_grad",
          [](double x, double y) {
              const auto g = eval_grad({x, y});
              return py::make_tuple(g[0], g[1]);
          },
          py::arg("x"), py::arg("y"));
    m.def("eval_hessian",
          [](double x, double y) {
              const Hessian2 h = eval_hessian({x, y});
              return py::make_tuple(py::make_tuple(h.xx, h.xy),
                                    py::make_tuple(h.xy, h.yy));
          },
          py::arg("x"), py::arg("y"));
    m.def("diagonal_value",
          [](double s) {
              const DiagonalValue dv = diagonal_value(s);
              return py::make_tuple(dv.u, dv.g);
          },
          py::arg("s"), "returns (u, g) at the diagonal point of arc length s");
    m.def("transverse_second_derivative",
          [](double s, double offset) {
              return diagonal_transverse_second_derivative(s, offset);
          },
          py::arg("s"), py::arg("offset"));

    m.def("aronsson_approximation",
          [](double x, double y) { return aronsson_approximation({x, y}); },
          py::arg("x"), py::arg("y"));
    m.def("theta_integral_u",
          [](double r, double theta) { return theta_integral_u({r, theta}); },
          py::arg("r"), py::arg("theta"));
    m.def("diagonal_excess", [](double r) { return diagonal_excess(r); }, py::arg("r"));
    m.def("ground_state_disproof", [](int n) { return ground_state_disproof(n); },
          py::arg("n_samples") = 400);

    m.def("fd_compare",
          [](int n, int radius) {
              GridSpec spec;
              spec.n = n;
              spec.stencil_radius = radius;
              const OracleReport rep = compare_fields(spec);
              py::dict out;
              out["n"] = rep.spec.n;
              out["stencil_radius"] = rep.spec.stencil_radius;
              out["sup_gap"] = rep.sup_gap;
              out["l2_gap"] = rep.l2_gap;
              out["sweeps"] = rep.sweeps;
              return out;
          },
          py::arg("n") = 101, py::arg("stencil_radius") = 3,
          "monotone finite-difference cross-check against the analytic field");

    m.def("verify",
          [](const std::string& suite) {
              std::vector<SuiteReport> reports;
              if (suite == "all") reports = verify_all();
              else if (suite == "series") reports = {verify_series()};
              else if (suite == "minimax") reports = {verify_minimax()};
              else if (suite == "field") reports = {verify_field()};
              else if (suite == "analysis") reports = {verify_analysis()};
              else throw DomainError("unknown suite: " + suite);
              py::list out;
              for (const auto& rep : reports) {
                  py::dict js;
                  js["suite"] = rep.suite;
                  py::list checks;
                  for (const auto& c : rep.checks) {
                      py::dict cj;
                      cj["name"] = c.name;
                      cj["pass"] = c.pass;
                      cj["measured"] = c.measured;
                      cj["tolerance"] = c.tolerance;
                      checks.append(cj);
                  }
                  js["checks"] = checks;
                  js["all_pass"] = rep.all_pass();
                  out.append(js);
              }
              return out;
          },
          py::arg("suite") = "all");
}
