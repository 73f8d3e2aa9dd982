#include "fracbvp/run_matrix.hpp"

#include "fracbvp/builtin.hpp"
#include "fracbvp/errors.hpp"
#include "fracbvp/frac_series.hpp"
#include "fracbvp/gamma.hpp"
#include "fracbvp/metrics.hpp"

#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>
#include <utility>

namespace fracbvp {

void add_cross_product(RunConfig& cfg, const std::vector<std::size_t>& problem_indices,
                       const std::vector<Method>& methods,
                       const std::vector<BasisFamily>& families,
                       const std::vector<int>& counts)
{
    for (std::size_t p : problem_indices)
        for (Method m : methods)
            for (BasisFamily f : families)
                for (int n : counts)
                    cfg.cells.push_back({p, m, f, n});
}

RunConfig paper_preset(const std::filesystem::path& out_dir)
{
    RunConfig cfg;
    cfg.out_dir = out_dir;
    for (int id = 1; id <= 4; ++id)
        cfg.problems.push_back({"problem" + std::to_string(id), builtin_problem(id)});

    const std::vector<BasisFamily> families{BasisFamily::ModifiedLegendre,
                                            BasisFamily::ModifiedBernoulli};
    const int counts[4] = {3, 3, 5, 3};
    for (std::size_t p = 0; p < 4; ++p) {
        // weak-form Galerkin only where the operator has a p(x) u'' term
        bool has_u2 = false;
        for (const OperatorTerm& t : cfg.problems[p].spec.terms) {
            const auto m = snap_to_integer(t.deriv_order);
            if (m && *m == 2 && t.exponent == 1)
                has_u2 = true;
        }
        const Method galerkin_flavor = has_u2 ? Method::GalerkinWeak : Method::Galerkin;
        // family-major order mirrors the reference tables: the Legendre
        // method block first, then the Bernoulli block
        for (BasisFamily f : families)
            for (Method m : {galerkin_flavor, Method::LeastSquares, Method::Collocation})
                cfg.cells.push_back({p, m, f, counts[p]});
    }
    return cfg;
}

std::string cell_label(Method m, BasisFamily f)
{
    std::string label;
    switch (m) {
    case Method::Galerkin: label = "gwr"; break;
    case Method::GalerkinWeak: label = "gwrw"; break;
    case Method::LeastSquares: label = "ls"; break;
    case Method::Collocation: label = "col"; break;
    }
    label += f == BasisFamily::ModifiedLegendre ? "_legendre" : "_bernoulli";
    return label;
}

namespace {

std::string family_name(BasisFamily f)
{
    return f == BasisFamily::ModifiedLegendre ? "legendre" : "bernoulli";
}

struct CellResult {
    std::optional<Solution> solution;
    std::optional<ErrorReport> report;
    std::string error;   // non-empty when the cell raised
};

CellResult run_cell(const RunConfig& cfg, const RunCell& cell)
{
    CellResult out;
    const ProblemSpec& spec = cfg.problems[cell.problem_index].spec;
    try {
        out.solution = solve(spec, cell.method, cell.family, cell.count, cfg.options);
        if (spec.exact) {
            const CompositeRule quad = make_composite(spec.a, spec.b, cfg.options.quad);
            out.report = make_error_report(exact_evaluator(spec.exact),
                                           out.solution->approx, quad, spec.a, spec.b);
        }
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

std::string cell_stem(const RunCell& cell)
{
    return method_name(cell.method) + "-" + family_name(cell.family) + "-n" +
           std::to_string(cell.count);
}

bool write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        return false;
    os << content;
    return os.good();
}

} // namespace

int run_matrix(const RunConfig& cfg)
{
    if (cfg.cells.empty() || cfg.problems.empty())
        throw DomainError("run_matrix: empty run configuration");

    // parallel solve phase; writes happen serially afterwards in cell order
    std::vector<CellResult> results(cfg.cells.size());
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = cfg.jobs > 0
                                 ? static_cast<unsigned>(cfg.jobs)
                                 : std::min<unsigned>(hw, cfg.cells.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < cfg.cells.size(); ++i)
            results[i] = run_cell(cfg, cfg.cells[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cfg.cells.size();
                     i = next.fetch_add(1))
                    results[i] = run_cell(cfg, cfg.cells[i]);
            });
        for (std::thread& t : pool)
            t.join();
    }

    bool io_ok = true;
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec)
        io_ok = false;

    for (std::size_t i = 0; i < cfg.cells.size() && io_ok; ++i) {
        const RunCell& cell = cfg.cells[i];
        const CellResult& res = results[i];
        if (!res.solution)
            continue;
        const auto dir = cfg.out_dir / cfg.problems[cell.problem_index].name;
        std::filesystem::create_directories(dir, ec);
        if (ec) {
            io_ok = false;
            break;
        }
        const std::string stem = cell_stem(cell);
        if (res.report) {
            if (cfg.formats.csv) {
                std::ostringstream os;
                emit_csv(*res.report, os);
                io_ok = io_ok && write_file(dir / (stem + ".csv"), os.str());
            }
            if (cfg.formats.markdown) {
                std::ostringstream os;
                emit_markdown(*res.report, os);
                io_ok = io_ok && write_file(dir / (stem + ".md"), os.str());
            }
            if (cfg.formats.plotdata) {
                std::ostringstream os;
                emit_plotdata(*res.report, os);
                io_ok = io_ok && write_file(dir / (stem + ".dat"), os.str());
            }
            continue;
        }
        // no exact solution: emit the sampled approximation instead of errors
        const ProblemSpec& spec = cfg.problems[cell.problem_index].spec;
        const auto grid = metric_grid(GridKind::Table11, spec.a, spec.b);
        if (cfg.formats.csv) {
            std::ostringstream os;
            os << "x,approx\r\n";
            for (double x : grid)
                os << format_full(x) << ',' << format_full(res.solution->approx(x))
                   << "\r\n";
            io_ok = io_ok && write_file(dir / (stem + ".csv"), os.str());
        }
        if (cfg.formats.plotdata) {
            std::ostringstream os;
            os << "# approx\n";
            for (double x : grid)
                os << format_full(x) << ' ' << format_full(res.solution->approx(x))
                   << "\n";
            io_ok = io_ok && write_file(dir / (stem + ".dat"), os.str());
        }
    }

    // per-problem combined tables
    for (std::size_t p = 0; p < cfg.problems.size() && io_ok; ++p) {
        const ProblemEntry& entry = cfg.problems[p];
        if (!entry.spec.exact)
            continue;
        std::vector<std::pair<std::string, Polynomial>> columns;
        for (std::size_t i = 0; i < cfg.cells.size(); ++i) {
            const RunCell& cell = cfg.cells[i];
            if (cell.problem_index != p || !results[i].solution ||
                !results[i].solution->diagnostics.converged)
                continue;
            columns.emplace_back(cell_label(cell.method, cell.family),
                                 results[i].solution->approx);
        }
        if (columns.empty())
            continue;
        const ErrorTable table = error_table(columns, exact_evaluator(entry.spec.exact),
                                             entry.spec.a, entry.spec.b);
        const auto dir = cfg.out_dir / entry.name;
        std::filesystem::create_directories(dir, ec);
        if (cfg.formats.csv) {
            std::ostringstream os;
            emit_csv(table, os);
            io_ok = io_ok && write_file(dir / "table.csv", os.str());
        }
        if (cfg.formats.markdown) {
            std::ostringstream os;
            emit_markdown(table, os);
            io_ok = io_ok && write_file(dir / "table.md", os.str());
        }
        if (cfg.formats.plotdata) {
            std::ostringstream os;
            emit_plotdata(table, os);
            io_ok = io_ok && write_file(dir / "table.dat", os.str());
        }
    }

    // run-level summary: per problem, the L-inf/L2 matrix with one column per
    // cell (reference-table layout), then convergence details
    bool any_cell_error = false;
    {
        std::ostringstream os;
        os << "# Run summary\n";
        for (std::size_t p = 0; p < cfg.problems.size(); ++p) {
            os << "\n## " << cfg.problems[p].name << "\n\n";
            std::vector<std::size_t> rows;
            for (std::size_t i = 0; i < cfg.cells.size(); ++i)
                if (cfg.cells[i].problem_index == p)
                    rows.push_back(i);

            os << "| error |";
            for (std::size_t i : rows)
                os << ' ' << cell_label(cfg.cells[i].method, cfg.cells[i].family)
                   << "-n" << cfg.cells[i].count << " |";
            os << "\n|---|";
            for (std::size_t k = 0; k < rows.size(); ++k)
                os << "---|";
            os << "\n";
            const char* metric_names[3] = {"L∞ (table grid)", "L∞ (dense)",
                                           "L₂"};
            for (int metric = 0; metric < 3; ++metric) {
                os << "| " << metric_names[metric] << " |";
                for (std::size_t i : rows) {
                    const CellResult& res = results[i];
                    if (!res.report) {
                        os << " - |";
                        continue;
                    }
                    const double v = metric == 0   ? res.report->linf_table
                                     : metric == 1 ? res.report->linf_dense
                                                   : res.report->l2;
                    os << ' ' << format_sci3(v);
                    if (res.solution && !res.solution->diagnostics.converged)
                        os << " (not converged)";
                    os << " |";
                }
                os << "\n";
            }

            os << "\n| cell | dim | iterations | residual | converged |\n";
            os << "|---|---|---|---|---|\n";
            for (std::size_t i : rows) {
                os << "| " << cell_stem(cfg.cells[i]) << " |";
                const CellResult& res = results[i];
                if (!res.error.empty()) {
                    any_cell_error = true;
                    os << " - | - | - | ERROR: " << res.error << " |\n";
                    continue;
                }
                const Diagnostics& d = res.solution->diagnostics;
                os << ' ' << d.dim << " | " << d.iterations << " | "
                   << format_sci3(d.residual_norm) << " | "
                   << (d.converged ? "yes" : "NO (marked)") << " |\n";
            }
        }
        io_ok = io_ok && write_file(cfg.out_dir / "index.md", os.str());
    }

    return (io_ok && !any_cell_error) ? 0 : 1;
}

namespace {

void problem2_diagnostics(std::ostream& os, const SolveOptions& base)
{
    const ProblemSpec spec = builtin_problem(2);
    os << "# problem2 diagnostics\n\n";
    os << "Claimed exact solution u = x - x^2 does not satisfy the equation as "
          "given: with D^1.5 (x - x^2) = -(4/sqrt(pi)) x^0.5 the residual of the "
          "claimed solution is\n\n";
    os << "    R(x) = 2 - (4/sqrt(pi)) sqrt(x)\n\n";
    os << "which is nonzero on (0,1]. Values on the table grid:\n\n";
    os << "| x | residual of claimed exact |\n|---|---|\n";
    const FracSeries claimed({{1.0, 1.0}, {-1.0, 2.0}});
    const FracSeries d15 = caputo_series(claimed, FracOrder(1.5));
    for (int i = 0; i <= 10; ++i) {
        const double x = i / 10.0;
        // D^1.5 u + 2 (u')^2 + 8 u with u = x - x^2
        const double du = 1.0 - 2.0 * x;
        const double r = d15.eval(x) + 2.0 * du * du + 8.0 * claimed.eval(x);
        os << "| " << x << " | " << format_sci3(r) << " |\n";
    }

    os << "\nSolver results against the claimed exact solution under both "
          "derivative-boundary-condition treatments:\n\n";
    os << "| toggle | cell | converged | L∞ (table) |\n|---|---|---|---|\n";
    for (DerivativeBcMode mode :
         {DerivativeBcMode::Constrain, DerivativeBcMode::LiftOnly}) {
        SolveOptions opts = base;
        opts.bc_mode = mode;
        for (Method m : {Method::Galerkin, Method::LeastSquares, Method::Collocation})
            for (BasisFamily f :
                 {BasisFamily::ModifiedLegendre, BasisFamily::ModifiedBernoulli}) {
                std::string row = mode == DerivativeBcMode::Constrain ? "constrain"
                                                                      : "lift-only";
                os << "| " << row << " | " << cell_label(m, f) << " | ";
                try {
                    const Solution sol = solve(spec, m, f, 3, opts);
                    const double linf = linf_error(exact_evaluator(spec.exact),
                                                   sol.approx, GridKind::Table11);
                    os << (sol.diagnostics.converged ? "yes" : "NO") << " | "
                       << format_sci3(linf) << " |\n";
                } catch (const std::exception& e) {
                    os << "ERROR: " << e.what() << " | - |\n";
                }
            }
    }
    os << "\nNo tested configuration reproduces error magnitudes near 1e-14 for "
          "this problem; the as-given statement and its claimed solution are "
          "mutually inconsistent, so reference error levels for it are not "
          "treated as reproducible ground truth.\n";
}

void problem3_diagnostics(std::ostream& os, const SolveOptions& base)
{
    os << "# problem3 diagnostics\n\n";
    // Riemann-Liouville monomial rule applied to the 2x^2 part by hand; the
    // library operation rejects the resulting non-integrable x^-1.5 image.
    const double rl_coeff = 2.0 * gamma_fn(3.0) * reciprocal_gamma(3.0 - 3.5);
    os << "The as-given right-hand side carries a -2*0.56*x^-1.5 term. The "
          "Riemann-Liouville image of the 2x^2 part of the exact solution is ";
    os << format_full(rl_coeff) << " * x^-1.5";
    os << ",\nwhich matches that term; the Caputo derivative annihilates x^2, so "
          "under the Caputo reading the term is spurious and the claimed exact "
          "solution does not satisfy the as-given equation. The Caputo-consistent "
          "right-hand side drops it (and uses full-precision gamma factors).\n\n";
    os << "| rhs variant | cell | converged | L∞ (table) |\n|---|---|---|---|\n";
    const ProblemSpec verbatim = builtin_problem(3);
    const ProblemSpec consistent = builtin_problem3_caputo_consistent();
    for (const auto& [label, spec] :
         {std::pair<const char*, const ProblemSpec&>{"as-given", verbatim},
          std::pair<const char*, const ProblemSpec&>{"caputo-consistent", consistent}}) {
        for (Method m : {Method::Galerkin, Method::LeastSquares, Method::Collocation})
            for (BasisFamily f :
                 {BasisFamily::ModifiedLegendre, BasisFamily::ModifiedBernoulli}) {
                os << "| " << label << " | " << cell_label(m, f) << " | ";
                try {
                    const Solution sol = solve(spec, m, f, 5, base);
                    const double linf = linf_error(exact_evaluator(spec.exact),
                                                   sol.approx, GridKind::Table11);
                    os << (sol.diagnostics.converged ? "yes" : "NO") << " | "
                       << format_sci3(linf) << " |\n";
                } catch (const std::exception& e) {
                    os << "ERROR: " << e.what() << " | - |\n";
                }
            }
    }
    os << "\nExact recovery (reference-level ~1e-13 errors) is reproduced by the "
          "Caputo-consistent right-hand side only.\n";
}

} // namespace

void write_reference_diagnostics(const std::filesystem::path& out_dir,
                                 const SolveOptions& options)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir / "problem2", ec);
    std::filesystem::create_directories(out_dir / "problem3", ec);
    {
        std::ostringstream os;
        problem2_diagnostics(os, options);
        write_file(out_dir / "problem2" / "diagnostics.md", os.str());
    }
    {
        std::ostringstream os;
        problem3_diagnostics(os, options);
        write_file(out_dir / "problem3" / "diagnostics.md", os.str());
    }
}

} // namespace fracbvp
