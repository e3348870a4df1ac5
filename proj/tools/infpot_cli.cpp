#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "infpot/analysis.hpp"
#include "infpot/fd_oracle.hpp"
#include "infpot/field.hpp"
#include "infpot/parallel.hpp"
#include "infpot/series.hpp"
#include "infpot/verify.hpp"

using nlohmann::json;

namespace {

// fixed 17-significant-digit formatting keeps identical invocations
// byte-identical
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

json sample_to_json(const infpot::FieldSample& s) {
    json node;
    node["x"] = s.point.x;
    node["y"] = s.point.y;
    node["u"] = s.u;
    if (std::isnan(s.grad[0]))
        node["grad"] = nullptr;
    else
        node["grad"] = {s.grad[0], s.grad[1]};
    if (s.hessian)
        node["hessian"] = {{s.hessian->xx, s.hessian->xy},
                           {s.hessian->xy, s.hessian->yy}};
    else
        node["hessian"] = nullptr;
    node["region"] = infpot::to_string(s.region);
    return node;
}

struct Tolerances {
    infpot::SeriesPolicy series;
    infpot::SolverPolicy solver;
};

int cmd_eval(double x, double y, const std::string& format, const Tolerances& tol) {
    const infpot::FieldSample s = infpot::sample_field({x, y}, tol.solver, tol.series);
    if (format == "json") {
        std::cout << sample_to_json(s).dump(2) << "\n";
        return 0;
    }
    std::cout << "u: " << fmt(s.u) << "\n";
    std::cout << "region: " << infpot::to_string(s.region) << "\n";
    if (std::isnan(s.grad[0]))
        std::cout << "grad: undefined at this point\n";
    else
        std::cout << "grad: [" << fmt(s.grad[0]) << ", " << fmt(s.grad[1]) << "]\n";
    if (s.hessian) {
        std::cout << "hessian: [[" << fmt(s.hessian->xx) << ", " << fmt(s.hessian->xy)
                  << "], [" << fmt(s.hessian->xy) << ", " << fmt(s.hessian->yy) << "]]\n";
    } else {
        std::cout << "hessian: omitted (" << infpot::to_string(s.region)
                  << " region; second derivatives do not extend there)\n";
    }
    return 0;
}

int cmd_grid(int nx, int ny, const std::string& out, const std::string& format,
             const Tolerances& tol) {
    if (nx < 2 || ny < 2) throw infpot::DomainError("grid: nx and ny must be >= 2");
    std::vector<infpot::FieldSample> samples(static_cast<std::size_t>(nx) * ny);
    infpot::parallel_for(static_cast<std::size_t>(ny), [&](std::size_t jy) {
        for (int ix = 0; ix < nx; ++ix) {
            const double x = 2.0 * ix / (nx - 1);
            const double y = 2.0 * static_cast<double>(jy) / (ny - 1);
            samples[jy * nx + ix] = infpot::sample_field({x, y}, tol.solver, tol.series);
        }
    });

    std::ofstream file;
    std::ostream& os = open_sink(out, file);
    if (format == "json") {
        json arr = json::array();
        for (const auto& s : samples) arr.push_back(sample_to_json(s));
        os << arr.dump(2) << "\n";
    } else {
        os << "x,y,u,ux,uy,region\n";
        for (const auto& s : samples)
            os << fmt(s.point.x) << ',' << fmt(s.point.y) << ',' << fmt(s.u) << ','
               << fmt(s.grad[0]) << ',' << fmt(s.grad[1]) << ','
               << infpot::to_string(s.region) << "\n";
    }
    return 0;
}

int cmd_diagonal(int n, const std::string& out, const std::string& format,
                 const Tolerances& tol) {
    if (n < 2) throw infpot::DomainError("diagonal: n must be >= 2");
    std::ofstream file;
    std::ostream& os = open_sink(out, file);
    std::vector<infpot::DiagonalValue> vals(static_cast<std::size_t>(n));
    infpot::parallel_for(vals.size(), [&](std::size_t k) {
        const double s = infpot::kSqrt2 * static_cast<double>(k) / (n - 1);
        vals[k] = infpot::diagonal_value(s, tol.solver, tol.series);
    });
    if (format == "json") {
        json arr = json::array();
        for (int k = 0; k < n; ++k) {
            const double s = infpot::kSqrt2 * k / (n - 1);
            arr.push_back({{"s", s}, {"u", vals[k].u}, {"g", vals[k].g}});
        }
        os << arr.dump(2) << "\n";
    } else {
        os << "s,u,g\n";
        for (int k = 0; k < n; ++k) {
            const double s = infpot::kSqrt2 * k / (n - 1);
            os << fmt(s) << ',' << fmt(vals[k].u) << ',' << fmt(vals[k].g) << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& out, const Tolerances& tol) {
    std::vector<infpot::SuiteReport> reports;
    if (suite == "all")
        reports = infpot::verify_all(tol.solver, tol.series);
    else if (suite == "series")
        reports = {infpot::verify_series(tol.series)};
    else if (suite == "minimax")
        reports = {infpot::verify_minimax(tol.solver, tol.series)};
    else if (suite == "field")
        reports = {infpot::verify_field(tol.solver, tol.series)};
    else if (suite == "analysis")
        reports = {infpot::verify_analysis(tol.solver, tol.series)};
    else
        throw CLI::ValidationError("--suite", "unknown suite: " + suite);

    bool all_pass = true;
    json doc;
    doc["suites"] = json::array();
    for (const auto& rep : reports) {
        json js;
        js["suite"] = rep.suite;
        js["checks"] = json::array();
        for (const auto& c : rep.checks) {
            js["checks"].push_back({{"name", c.name},
                                    {"pass", c.pass},
                                    {"measured", c.measured},
                                    {"tolerance", c.tolerance}});
            all_pass = all_pass && c.pass;
        }
        js["all_pass"] = rep.all_pass();
        doc["suites"].push_back(js);
    }
    doc["all_pass"] = all_pass;

    std::ofstream file;
    std::ostream& os = open_sink(out, file);
    os << doc.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int cmd_oracle(int n, int radius, const std::string& out, const std::string& format,
               const Tolerances& tol) {
    infpot::GridSpec spec;
    spec.n = n;
    spec.stencil_radius = radius;
    const infpot::OracleReport rep = infpot::compare_fields(spec, tol.solver, tol.series);

    json doc;
    doc["n"] = spec.n;
    doc["stencil_radius"] = spec.stencil_radius;
    doc["sweeps"] = rep.sweeps;
    doc["final_residual"] = rep.final_residual;
    doc["sup_gap"] = rep.sup_gap;
    doc["l2_gap"] = rep.l2_gap;

    if (!out.empty()) {
        std::ofstream file;
        std::ostream& os = open_sink(out, file);
        if (format == "json") {
            doc["gaps"] = rep.gaps;
            os << doc.dump(2) << "\n";
        } else {
            // same layout as the analytic grids; the discrete scheme carries
            // no gradient, so ux and uy stay nan
            os << "x,y,u,ux,uy,region\n";
            for (int j = 0; j < spec.n; ++j)
                for (int i = 0; i < spec.n; ++i) {
                    const infpot::FieldSample s = infpot::sample_field(
                        {spec.coord(i), spec.coord(j)}, tol.solver, tol.series);
                    os << fmt(spec.coord(i)) << ',' << fmt(spec.coord(j)) << ','
                       << fmt(rep.discrete[static_cast<std::size_t>(i) * spec.n + j])
                       << ",nan,nan," << infpot::to_string(s.region) << "\n";
                }
        }
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_theta(double z, double q, const std::string& form, const Tolerances& tol) {
    if (form == "series" || form == "both")
        std::cout << "series: "
                  << fmt(infpot::eval_theta2(z, q, infpot::Theta2Form::Series, tol.series))
                  << "\n";
    if (form == "product" || form == "both")
        std::cout << "product: "
                  << fmt(infpot::eval_theta2(z, q, infpot::Theta2Form::Product, tol.series))
                  << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"infpot: the infinity-potential of the punctured square"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global tolerance flags after a subcommand

    Tolerances tol;
    app.add_option("--abs-tol", tol.series.abs_tol, "series truncation tolerance")
        ->capture_default_str();
    app.add_option("--root-tol", tol.solver.root_tol, "root-solve residual tolerance")
        ->capture_default_str();

    double x = 0.0, y = 0.0, z = 0.0, q = 0.0;
    int nx = 101, ny = 101, ndiag = 201, ngrid = 101, radius = 3;
    std::string out, format = "csv", eval_format = "text", suite = "all", form = "both";

    CLI::App* eval = app.add_subcommand("eval", "value, gradient and Hessian at one point");
    eval->add_option("x", x, "abscissa in [0,2]")->required();
    eval->add_option("y", y, "ordinate in [0,2]")->required();
    eval->add_option("--format", eval_format, "text|json")->capture_default_str();

    CLI::App* grid = app.add_subcommand("grid", "sample the field on a grid");
    grid->add_option("--nx", nx, "grid nodes in x")->capture_default_str();
    grid->add_option("--ny", ny, "grid nodes in y")->capture_default_str();
    grid->add_option("--out", out, "output file (stdout when absent)");
    grid->add_option("--format", format, "csv|json")->capture_default_str();

    CLI::App* diag = app.add_subcommand("diagonal", "sample u and |grad u| on the diagonal");
    diag->add_option("--n", ndiag, "number of samples")->capture_default_str();
    diag->add_option("--out", out, "output file (stdout when absent)");
    diag->add_option("--format", format, "csv|json")->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--suite", suite, "series|minimax|field|analysis|all")
        ->capture_default_str();
    verify->add_option("--out", out, "write the JSON report here instead of stdout");

    CLI::App* oracle = app.add_subcommand("oracle", "monotone finite-difference cross-check");
    oracle->add_option("--n", ngrid, "nodes per side (odd, >= 17)")->capture_default_str();
    oracle->add_option("--stencil-radius", radius, "neighbourhood radius in cells")
        ->capture_default_str();
    oracle->add_option("--out", out, "export the discrete grid (csv) or report (json)");
    oracle->add_option("--format", format, "csv|json")->capture_default_str();

    CLI::App* theta = app.add_subcommand("theta", "evaluate Jacobi theta_2(z, q)");
    theta->add_option("z", z, "argument in radians")->required();
    theta->add_option("q", q, "nome in [0,1)")->required();
    theta->add_option("--form", form, "series|product|both")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(x, y, eval_format, tol);
        if (grid->parsed()) return cmd_grid(nx, ny, out, format, tol);
        if (diag->parsed()) return cmd_diagonal(ndiag, out, format, tol);
        if (verify->parsed()) return cmd_verify(suite, out, tol);
        if (oracle->parsed()) return cmd_oracle(ngrid, radius, out, format, tol);
        if (theta->parsed()) return cmd_theta(z, q, form, tol);
    } catch (const infpot::DomainError& e) {
        std::cerr << "domain error: " << e.what()
                  << " (the square is [0,2] x [0,2])\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
