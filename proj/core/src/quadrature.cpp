#include "fracbvp/quadrature.hpp"

#include "fracbvp/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace fracbvp {

QuadratureRule gauss_legendre_rule(int npoints)
{
    if (npoints < 1 || npoints > 128)
        throw DomainError("gauss_legendre_rule: npoints out of [1,128]");

    const int n = npoints;
    QuadratureRule rule;
    rule.order = n;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    constexpr double kPi = 3.141592653589793238462643383279502884;
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev initial guess for the i-th root of P_n
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double step = p1 / pp;
            z -= step;
            if (std::fabs(step) < 1e-15)
                break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = 0.0;
    return rule;
}

CompositeRule graded_composite(double a, double b, int panels, double grading_ratio,
                               QuadratureRule base)
{
    if (!(a < b))
        throw DomainError("graded_composite: requires a < b");
    if (panels < 1 || panels > 64)
        throw DomainError("graded_composite: panels out of [1,64]");
    if (!(grading_ratio > 0.0 && grading_ratio < 1.0))
        throw DomainError("graded_composite: ratio out of (0,1)");

    // widths w*r^(p-1), ..., w*r, w from left to right, summing to b-a
    double geom_sum = 0.0;
    for (int i = 0; i < panels; ++i)
        geom_sum = geom_sum * grading_ratio + 1.0;
    const double widest = (b - a) / geom_sum;

    CompositeRule rule;
    rule.base = std::move(base);
    rule.panels.reserve(panels);
    double left = a;
    for (int i = 0; i < panels; ++i) {
        const double width = widest * std::pow(grading_ratio, panels - 1 - i);
        double right = left + width;
        if (i == panels - 1)
            right = b;  // last panel absorbs rounding
        rule.panels.push_back({left, right});
        left = right;
    }
    return rule;
}

double integrate(const std::function<double(double)>& f, const CompositeRule& rule)
{
    double total = 0.0;
    for (const Panel& panel : rule.panels) {
        const double mid = 0.5 * (panel.left + panel.right);
        const double halfw = 0.5 * (panel.right - panel.left);
        double sum = 0.0;
        for (std::size_t k = 0; k < rule.base.nodes.size(); ++k) {
            const double x = mid + halfw * rule.base.nodes[k];
            const double v = f(x);
            if (!std::isfinite(v))
                throw QuadratureError("integrate: non-finite integrand at x = " +
                                      std::to_string(x));
            sum += rule.base.weights[k] * v;
        }
        total += halfw * sum;
    }
    return total;
}

CompositeRule make_composite(double a, double b, const QuadratureConfig& cfg)
{
    return graded_composite(a, b, cfg.panels, cfg.ratio, gauss_legendre_rule(cfg.points));
}

} // namespace fracbvp
