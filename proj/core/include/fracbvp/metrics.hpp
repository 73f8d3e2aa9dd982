#ifndef FRACBVP_METRICS_HPP
#define FRACBVP_METRICS_HPP

#include "fracbvp/expr.hpp"
#include "fracbvp/frac_series.hpp"
#include "fracbvp/polynomial.hpp"
#include "fracbvp/quadrature.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fracbvp {

using ExactFn = std::function<double(double)>;

ExactFn exact_evaluator(const ExprPtr& e);
ExactFn exact_evaluator(const FracSeries& s);

/// Integral of the squared deviation over the rule's span, WITHOUT a square
/// root (the convention the reference tables use).
double l2_error(const ExactFn& exact, const Polynomial& approx, const CompositeRule& quad);

enum class GridKind { Table11, Dense1001 };

std::vector<double> metric_grid(GridKind kind, double a, double b);

/// Max absolute deviation over the chosen grid.
double linf_error(const ExactFn& exact, const Polynomial& approx, GridKind grid,
                  double a = 0.0, double b = 1.0);

struct ErrorReport {
    std::vector<double> sample_points;   // the 11-point table grid
    std::vector<double> exact_values;
    std::vector<double> approx_values;
    std::vector<double> abs_errors;
    double l2 = 0.0;
    double linf_table = 0.0;    // max over the 11-point grid
    double linf_dense = 0.0;    // max over 1001 uniform points
};

ErrorReport make_error_report(const ExactFn& exact, const Polynomial& approx,
                              const CompositeRule& quad, double a = 0.0, double b = 1.0);

/// Multi-solution table mirroring the reference layout: one row per grid
/// point with the exact value and per-column absolute errors, plus a
/// trailing max row.
struct ErrorTable {
    std::vector<double> points;
    std::vector<double> exact_values;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> errors;   // errors[col][row]
    std::vector<double> linf;                  // per column, max of its rows
};

ErrorTable error_table(const std::vector<std::pair<std::string, Polynomial>>& solutions,
                       const ExactFn& exact, double a = 0.0, double b = 1.0);

/// "3.84×10^-4"-style fixed 3-significant-digit scientific form; "0" for 0.
std::string format_sci3(double v);

/// Full-precision numeric literal (17 significant digits, round-trips).
std::string format_full(double v);

void emit_csv(const ErrorTable& table, std::ostream& os);
void emit_markdown(const ErrorTable& table, std::ostream& os);
void emit_plotdata(const ErrorTable& table, std::ostream& os);

void emit_csv(const ErrorReport& report, std::ostream& os);
void emit_markdown(const ErrorReport& report, std::ostream& os);
void emit_plotdata(const ErrorReport& report, std::ostream& os);

} // namespace fracbvp

#endif
