// fracbvp: weighted-residual solvers for nonlinear fractional-order
// two-point boundary value problems.
//
//   fracbvp solve --problem 1 --method galerkin --family legendre --count 3
//   fracbvp reproduce --paper --out out/

#include "fracbvp/builtin.hpp"
#include "fracbvp/errors.hpp"
#include "fracbvp/metrics.hpp"
#include "fracbvp/problem_config.hpp"
#include "fracbvp/run_matrix.hpp"
#include "fracbvp/wrm.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace fracbvp;

ProblemSpec resolve_problem(const std::string& ref, std::string& name_out)
{
    if (ref.size() == 1 && ref[0] >= '1' && ref[0] <= '4') {
        name_out = "problem" + ref;
        return builtin_problem(ref[0] - '0');
    }
    const std::filesystem::path path(ref);
    name_out = path.stem().string();
    return load_problem_config(path);
}

Method parse_method(const std::string& s)
{
    if (s == "galerkin")
        return Method::Galerkin;
    if (s == "galerkin-weak")
        return Method::GalerkinWeak;
    if (s == "least-squares")
        return Method::LeastSquares;
    if (s == "collocation")
        return Method::Collocation;
    throw CLI::ValidationError("--method", "unknown method '" + s + "'");
}

BasisFamily parse_family(const std::string& s)
{
    if (s == "legendre")
        return BasisFamily::ModifiedLegendre;
    if (s == "bernoulli")
        return BasisFamily::ModifiedBernoulli;
    throw CLI::ValidationError("--family", "unknown family '" + s + "'");
}

OutputFormats parse_formats(const std::vector<std::string>& formats)
{
    if (formats.empty())
        return {};
    OutputFormats out{false, false, false};
    for (const std::string& f : formats) {
        if (f == "csv")
            out.csv = true;
        else if (f == "md")
            out.markdown = true;
        else if (f == "plot")
            out.plotdata = true;
        else if (f == "all")
            out = {true, true, true};
        else
            throw CLI::ValidationError("--format", "unknown format '" + f + "'");
    }
    return out;
}

void print_solution(const std::string& name, const Solution& sol, const ProblemSpec& spec,
                    const SolveOptions& opts)
{
    std::printf("%s / %s / %s / n=%d\n", name.c_str(), method_name(sol.method).c_str(),
                sol.family == BasisFamily::ModifiedLegendre ? "legendre" : "bernoulli",
                sol.count);
    std::printf("  dim %d, %d Newton iterations, residual %.3e, %s\n",
                sol.diagnostics.dim, sol.diagnostics.iterations,
                sol.diagnostics.residual_norm,
                sol.diagnostics.converged ? "converged" : "NOT CONVERGED");
    std::printf("  u(x) =");
    for (int k = 0; k <= sol.approx.degree(); ++k) {
        if (k == 0)
            std::printf(" %.10g", sol.approx.coeff(k));
        else
            std::printf(" %+.10g x^%d", sol.approx.coeff(k), k);
    }
    std::printf("\n");
    if (spec.exact) {
        const CompositeRule quad = make_composite(spec.a, spec.b, opts.quad);
        const ErrorReport report =
            make_error_report(exact_evaluator(spec.exact), sol.approx, quad, spec.a, spec.b);
        std::printf("  Linf (11-point grid) = %.6e\n", report.linf_table);
        std::printf("  Linf (dense grid)    = %.6e\n", report.linf_dense);
        std::printf("  L2                   = %.6e\n", report.l2);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Weighted-residual solvers (Galerkin, least-squares, collocation) "
                 "over modified Legendre/Bernoulli bases for nonlinear "
                 "fractional-order two-point boundary value problems"};
    app.require_subcommand(1);

    std::string problem_ref, method_str = "galerkin", family_str = "legendre";
    int count = 3;
    std::string out_dir;
    std::vector<std::string> format_strs;
    int quad_points = 16, quad_panels = 20;
    double quad_ratio = 0.5, newton_tol = 1e-12;
    std::string deriv_bc = "constrain";
    int jobs = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_dir, "output directory for report files");
        cmd->add_option("--format", format_strs, "csv|md|plot|all (repeatable)");
        cmd->add_option("--quad-points", quad_points, "Gauss-Legendre points per panel")
            ->check(CLI::Range(1, 128));
        cmd->add_option("--quad-panels", quad_panels, "graded panels per integral")
            ->check(CLI::Range(1, 64));
        cmd->add_option("--quad-ratio", quad_ratio, "panel grading ratio in (0,1)");
        cmd->add_option("--newton-tol", newton_tol, "Newton step/residual tolerance");
        cmd->add_option("--deriv-bc", deriv_bc,
                        "derivative boundary conditions: constrain|lift-only");
        cmd->add_option("--jobs", jobs, "worker limit for matrix cells");
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve a single cell");
    solve_cmd->add_option("--problem", problem_ref, "builtin id 1..4 or config path")
        ->required();
    solve_cmd->add_option("--method", method_str,
                          "galerkin|galerkin-weak|least-squares|collocation");
    solve_cmd->add_option("--family", family_str, "legendre|bernoulli");
    solve_cmd->add_option("--count", count, "basis size before constraint reduction")
        ->check(CLI::Range(1, 19));
    add_common(solve_cmd);

    CLI::App* repro_cmd =
        app.add_subcommand("reproduce", "run a full problem/method/family matrix");
    bool paper = false;
    repro_cmd->add_flag("--paper", paper,
                        "the reference preset: problems 1-4 at n = 3,3,5,3, "
                        "three methods, both families");
    add_common(repro_cmd);

    CLI11_PARSE(app, argc, argv);

    SolveOptions options;
    options.quad = {quad_points, quad_panels, quad_ratio};
    options.newton.residual_tol = newton_tol;
    options.newton.step_tol = newton_tol;
    if (deriv_bc == "lift-only")
        options.bc_mode = DerivativeBcMode::LiftOnly;
    else if (deriv_bc != "constrain") {
        std::cerr << "error: --deriv-bc must be constrain or lift-only\n";
        return 2;
    }

    try {
        if (solve_cmd->parsed()) {
            std::string name;
            const ProblemSpec spec = resolve_problem(problem_ref, name);
            const Method method = parse_method(method_str);
            const BasisFamily family = parse_family(family_str);
            const Solution sol = solve(spec, method, family, count, options);
            print_solution(name, sol, spec, options);
            if (!out_dir.empty()) {
                RunConfig cfg;
                cfg.problems.push_back({name, spec});
                cfg.cells.push_back({0, method, family, count});
                cfg.options = options;
                cfg.out_dir = out_dir;
                cfg.formats = parse_formats(format_strs);
                cfg.jobs = 1;
                return run_matrix(cfg);
            }
            return sol.diagnostics.converged ? 0 : 1;
        }

        // reproduce
        if (!paper) {
            std::cerr << "error: reproduce requires --paper\n";
            return 2;
        }
        RunConfig cfg = paper_preset(out_dir.empty() ? "out" : out_dir);
        cfg.options = options;
        cfg.formats = parse_formats(format_strs);
        cfg.jobs = jobs;
        const int status = run_matrix(cfg);
        write_reference_diagnostics(cfg.out_dir, options);
        std::printf("wrote %s\n", cfg.out_dir.string().c_str());
        return status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
