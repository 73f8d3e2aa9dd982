#ifndef FRACBVP_RUN_MATRIX_HPP
#define FRACBVP_RUN_MATRIX_HPP

#include "fracbvp/problem.hpp"
#include "fracbvp/wrm.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace fracbvp {

struct ProblemEntry {
    std::string name;   // output subdirectory
    ProblemSpec spec;
};

struct RunCell {
    std::size_t problem_index;
    Method method;
    BasisFamily family;
    int count;
};

struct OutputFormats {
    bool csv = true;
    bool markdown = true;
    bool plotdata = true;
};

struct RunConfig {
    std::vector<ProblemEntry> problems;
    std::vector<RunCell> cells;
    SolveOptions options;
    std::filesystem::path out_dir;
    OutputFormats formats;
    int jobs = 0;   // 0: hardware concurrency
};

/// Expands problems x methods x families x counts into cells, in order.
void add_cross_product(RunConfig& cfg, const std::vector<std::size_t>& problem_indices,
                       const std::vector<Method>& methods,
                       const std::vector<BasisFamily>& families,
                       const std::vector<int>& counts);

/// The reference reproduction preset: the four built-in problems at their
/// reference basis sizes (3, 3, 5, 3), three methods each (weak-form Galerkin
/// where the operator carries a p(x) u'' term, strong elsewhere), both
/// families.
RunConfig paper_preset(const std::filesystem::path& out_dir);

/// Short column label, e.g. "gwr_legendre".
std::string cell_label(Method m, BasisFamily f);

/// Solves every cell (concurrently up to the worker limit), then writes, per
/// cell, <out>/<problem>/<method>-<family>-n<count>.{csv,md,dat}; per
/// problem, a combined table.{csv,md}; and a run-level index.md with the
/// L-inf/L2 matrix. Non-converged cells are marked, not errors. Returns 0
/// unless a cell raised or an output could not be written.
int run_matrix(const RunConfig& cfg);

/// Diagnostics for the two problems whose as-given statements are
/// inconsistent with their claimed exact solutions: the claimed-solution
/// residual and both boundary-condition toggles for problem 2, the as-given
/// vs Caputo-consistent right-hand side for problem 3. Written as
/// diagnostics.md under the problem directories.
void write_reference_diagnostics(const std::filesystem::path& out_dir,
                                 const SolveOptions& options);

} // namespace fracbvp

#endif
