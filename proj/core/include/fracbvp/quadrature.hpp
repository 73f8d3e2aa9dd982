#ifndef FRACBVP_QUADRATURE_HPP
#define FRACBVP_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace fracbvp {

/// Gauss-Legendre rule on (-1, 1). Weights sum to 2; nodes symmetric about 0.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order = 0;  // number of points
};

/// Nodes by Newton iteration from Chebyshev initial guesses; weights
/// 2 / ((1 - x^2) P_n'(x)^2). Exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre_rule(int npoints);

struct Panel {
    double left;
    double right;
};

/// Partition of [a,b] into panels plus the base rule applied on each panel.
struct CompositeRule {
    std::vector<Panel> panels;
    QuadratureRule base;
};

/// Panel widths form a geometric sequence shrinking toward `a` with the given
/// ratio; the rightmost panel is widest. Widths sum to b-a exactly (the last
/// breakpoint is pinned to b).
CompositeRule graded_composite(double a, double b, int panels, double grading_ratio,
                               QuadratureRule base);

/// Sum of affinely mapped base-rule sums over panels, in panel order.
/// Throws QuadratureError if f is non-finite at a node (node reported).
double integrate(const std::function<double(double)>& f, const CompositeRule& rule);

/// Quadrature configuration exposed through the CLI.
struct QuadratureConfig {
    int points = 16;
    int panels = 20;
    double ratio = 0.5;
};

/// Default composite rule on [a,b]: panels graded toward the left endpoint,
/// where x^(k - alpha) integrands lose smoothness.
CompositeRule make_composite(double a, double b, const QuadratureConfig& cfg = {});

} // namespace fracbvp

#endif
