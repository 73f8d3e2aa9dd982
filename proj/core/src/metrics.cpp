#include "fracbvp/metrics.hpp"

#include "fracbvp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace fracbvp {

ExactFn exact_evaluator(const ExprPtr& e)
{
    if (!e)
        throw DomainError("exact_evaluator: null expression");
    return [e](double x) { return eval_expr(*e, x); };
}

ExactFn exact_evaluator(const FracSeries& s)
{
    return [s](double x) { return s.eval(x); };
}

double l2_error(const ExactFn& exact, const Polynomial& approx, const CompositeRule& quad)
{
    return integrate(
        [&](double x) {
            const double d = exact(x) - approx(x);
            return d * d;
        },
        quad);
}

std::vector<double> metric_grid(GridKind kind, double a, double b)
{
    const int n = kind == GridKind::Table11 ? 11 : 1001;
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pts[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1.0);
    return pts;
}

double linf_error(const ExactFn& exact, const Polynomial& approx, GridKind grid,
                  double a, double b)
{
    double worst = 0.0;
    for (double x : metric_grid(grid, a, b))
        worst = std::max(worst, std::fabs(exact(x) - approx(x)));
    return worst;
}

ErrorReport make_error_report(const ExactFn& exact, const Polynomial& approx,
                              const CompositeRule& quad, double a, double b)
{
    ErrorReport r;
    r.sample_points = metric_grid(GridKind::Table11, a, b);
    for (double x : r.sample_points) {
        r.exact_values.push_back(exact(x));
        r.approx_values.push_back(approx(x));
        r.abs_errors.push_back(std::fabs(r.exact_values.back() - r.approx_values.back()));
    }
    r.l2 = l2_error(exact, approx, quad);
    r.linf_table = *std::max_element(r.abs_errors.begin(), r.abs_errors.end());
    r.linf_dense = linf_error(exact, approx, GridKind::Dense1001, a, b);
    return r;
}

ErrorTable error_table(const std::vector<std::pair<std::string, Polynomial>>& solutions,
                       const ExactFn& exact, double a, double b)
{
    if (solutions.empty())
        throw DomainError("error_table: no solutions");
    ErrorTable t;
    t.points = metric_grid(GridKind::Table11, a, b);
    for (double x : t.points)
        t.exact_values.push_back(exact(x));
    for (const auto& [name, approx] : solutions) {
        t.columns.push_back(name);
        std::vector<double> col;
        col.reserve(t.points.size());
        for (std::size_t i = 0; i < t.points.size(); ++i)
            col.push_back(std::fabs(t.exact_values[i] - approx(t.points[i])));
        t.linf.push_back(*std::max_element(col.begin(), col.end()));
        t.errors.push_back(std::move(col));
    }
    return t;
}

std::string format_sci3(double v)
{
    if (v == 0.0)
        return "0";
    char buf[48];
    const double av = std::fabs(v);
    int exp10 = static_cast<int>(std::floor(std::log10(av)));
    double mant = av / std::pow(10.0, exp10);
    // keep the mantissa in [1,10) after 3-digit rounding
    if (std::round(mant * 100.0) >= 1000.0) {
        mant /= 10.0;
        ++exp10;
    }
    std::snprintf(buf, sizeof buf, "%s%.2f×10^%d", v < 0.0 ? "-" : "", mant, exp10);
    return buf;
}

std::string format_full(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_csv(const ErrorTable& table, std::ostream& os)
{
    os << "x,exact";
    for (const std::string& c : table.columns)
        os << ',' << c;
    os << "\r\n";
    for (std::size_t i = 0; i < table.points.size(); ++i) {
        os << format_full(table.points[i]) << ',' << format_full(table.exact_values[i]);
        for (const auto& col : table.errors)
            os << ',' << format_full(col[i]);
        os << "\r\n";
    }
    os << "linf,";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << ',' << format_full(table.linf[c]);
    os << "\r\n";
}

void emit_markdown(const ErrorTable& table, std::ostream& os)
{
    os << "| x | exact |";
    for (const std::string& c : table.columns)
        os << ' ' << c << " |";
    os << "\n|---|---|";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << "---|";
    os << "\n";
    char buf[40];
    for (std::size_t i = 0; i < table.points.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6g", table.points[i]);
        os << "| " << buf << " | ";
        std::snprintf(buf, sizeof buf, "%.6g", table.exact_values[i]);
        os << buf << " |";
        for (const auto& col : table.errors)
            os << ' ' << format_sci3(col[i]) << " |";
        os << "\n";
    }
    os << "| L∞ | |";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << ' ' << format_sci3(table.linf[c]) << " |";
    os << "\n";
}

void emit_plotdata(const ErrorTable& table, std::ostream& os)
{
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0)
            os << "\n";
        os << "# " << table.columns[c] << "\n";
        for (std::size_t i = 0; i < table.points.size(); ++i)
            os << format_full(table.points[i]) << ' '
               << format_full(table.errors[c][i]) << "\n";
    }
}

void emit_csv(const ErrorReport& report, std::ostream& os)
{
    os << "x,exact,approx,abs_error\r\n";
    for (std::size_t i = 0; i < report.sample_points.size(); ++i)
        os << format_full(report.sample_points[i]) << ','
           << format_full(report.exact_values[i]) << ','
           << format_full(report.approx_values[i]) << ','
           << format_full(report.abs_errors[i]) << "\r\n";
    os << "l2," << format_full(report.l2) << ",,\r\n";
    os << "linf_table," << format_full(report.linf_table) << ",,\r\n";
    os << "linf_dense," << format_full(report.linf_dense) << ",,\r\n";
}

void emit_markdown(const ErrorReport& report, std::ostream& os)
{
    os << "| x | exact | approx | abs error |\n|---|---|---|---|\n";
    char buf[40];
    for (std::size_t i = 0; i < report.sample_points.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6g", report.sample_points[i]);
        os << "| " << buf << " | ";
        std::snprintf(buf, sizeof buf, "%.10g", report.exact_values[i]);
        os << buf << " | ";
        std::snprintf(buf, sizeof buf, "%.10g", report.approx_values[i]);
        os << buf << " | " << format_sci3(report.abs_errors[i]) << " |\n";
    }
    os << "\nL∞ (table grid) = " << format_sci3(report.linf_table)
       << "  \nL∞ (dense) = " << format_sci3(report.linf_dense)
       << "  \nL₂ = " << format_sci3(report.l2) << "\n";
}

void emit_plotdata(const ErrorReport& report, std::ostream& os)
{
    os << "# abs_error\n";
    for (std::size_t i = 0; i < report.sample_points.size(); ++i)
        os << format_full(report.sample_points[i]) << ' '
           << format_full(report.abs_errors[i]) << "\n";
}

} // namespace fracbvp
