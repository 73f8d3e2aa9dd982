#include "fracbvp/wrm.hpp"

#include "fracbvp/errors.hpp"
#include "fracbvp/frac_series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace fracbvp {

std::string method_name(Method m)
{
    switch (m) {
    case Method::Galerkin: return "galerkin";
    case Method::GalerkinWeak: return "galerkin-weak";
    case Method::LeastSquares: return "least-squares";
    case Method::Collocation: return "collocation";
    }
    return "?";
}

std::vector<double> collocation_grid(double a, int n)
{
    if (n < 1)
        throw DomainError("collocation_grid: n >= 1 required");
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        pts[static_cast<std::size_t>(j - 1)] = (a + j) / (n + 1.0);
    return pts;
}

namespace {

double pow_int(double base, int e)
{
    double acc = 1.0;
    for (int i = 0; i < e; ++i)
        acc *= base;
    return acc;
}

FracSeries derivative_image(const Polynomial& p, double order)
{
    if (order == 0.0)
        return p.to_series();
    return caputo_series(p.to_series(), FracOrder(order));
}

} // namespace

struct ResidualSystem::PointState {
    std::vector<double> term_value;    // D^o u at x, per term
    std::vector<double> term_coeff;    // coefficient(x), per term
    std::vector<std::vector<double>> term_basis;   // D^o theta_j at x
    double rhs = 0.0;
    double trial_dx = 0.0;             // u'(x), weak terms only
    std::vector<double> basis_dx;      // theta_j'(x), weak terms only
};

ResidualSystem::ResidualSystem(Method method, TrialSpace trial, ProblemSpec problem)
    : method_(method), trial_(std::move(trial)), problem_(std::move(problem))
{
    validate(problem_);
    if (trial_.basis.empty())
        throw DomainError("ResidualSystem: empty trial basis");

    bool has_fractional = false;
    for (const OperatorTerm& t : problem_.terms)
        if (!snap_to_integer(t.deriv_order))
            has_fractional = true;
    if (has_fractional && problem_.a != 0.0)
        throw DomainError("ResidualSystem: fractional operators require the "
                          "domain to start at 0");

    const bool weak_form = method_ == Method::GalerkinWeak;
    for (const OperatorTerm& t : problem_.terms) {
        TermData data;
        data.coefficient = t.coefficient;
        data.exponent = t.exponent;
        const auto order_int = snap_to_integer(t.deriv_order);
        data.weak = weak_form && order_int && *order_int == 2 && t.exponent == 1;
        data.lift_image = derivative_image(trial_.lift, t.deriv_order);
        data.basis_images.reserve(trial_.basis.size());
        for (const Polynomial& theta : trial_.basis)
            data.basis_images.push_back(derivative_image(theta, t.deriv_order));
        terms_.push_back(std::move(data));
    }

    lift_dx_ = trial_.lift.derivative();
    for (const Polynomial& theta : trial_.basis)
        basis_dx_.push_back(theta.derivative());

    if (method_ == Method::Collocation)
        collocation_points_ = collocation_grid(problem_.a, dim());
}

void ResidualSystem::eval_point(std::span<const double> coeffs, double x,
                                PointState& st) const
{
    const std::size_t n = trial_.basis.size();
    st.term_value.assign(terms_.size(), 0.0);
    st.term_coeff.assign(terms_.size(), 0.0);
    st.term_basis.assign(terms_.size(), std::vector<double>(n, 0.0));
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        double v = terms_[t].lift_image.eval(x);
        for (std::size_t j = 0; j < n; ++j) {
            const double bj = terms_[t].basis_images[j].eval(x);
            st.term_basis[t][j] = bj;
            v += coeffs[j] * bj;
        }
        st.term_value[t] = v;
        st.term_coeff[t] = eval_expr(terms_[t].coefficient, x);
    }
    st.rhs = eval_expr(problem_.rhs, x);
    st.trial_dx = lift_dx_(x);
    st.basis_dx.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        st.basis_dx[j] = basis_dx_[j](x);
        st.trial_dx += coeffs[j] * st.basis_dx[j];
    }
}

double ResidualSystem::residual_at(std::span<const double> coeffs, double x) const
{
    if (coeffs.size() != trial_.basis.size())
        throw DomainError("residual_at: coefficient count mismatch");
    PointState st;
    eval_point(coeffs, x, st);
    double r = -st.rhs;
    for (std::size_t t = 0; t < terms_.size(); ++t)
        r += st.term_coeff[t] * pow_int(st.term_value[t], terms_[t].exponent);
    return r;
}

void ResidualSystem::assemble(std::span<const double> coeffs, const CompositeRule& quad,
                              std::vector<double>& f_out, Matrix& j_out) const
{
    const std::size_t n = trial_.basis.size();
    if (coeffs.size() != n)
        throw DomainError("assemble: coefficient count mismatch");
    f_out.assign(n, 0.0);
    j_out = Matrix(n, n);
    PointState st;

    if (method_ == Method::Collocation) {
        for (std::size_t row = 0; row < n; ++row) {
            const double x = collocation_points_[row];
            eval_point(coeffs, x, st);
            double r = -st.rhs;
            for (std::size_t t = 0; t < terms_.size(); ++t) {
                const TermData& td = terms_[t];
                r += st.term_coeff[t] * pow_int(st.term_value[t], td.exponent);
                const double slope = st.term_coeff[t] * td.exponent *
                                     pow_int(st.term_value[t], td.exponent - 1);
                for (std::size_t k = 0; k < n; ++k)
                    j_out(row, k) += slope * st.term_basis[t][k];
            }
            f_out[row] = r;
        }
        return;
    }

    std::vector<double> theta(n), theta_dx(n), dr(n);
    for (const Panel& panel : quad.panels) {
        const double mid = 0.5 * (panel.left + panel.right);
        const double halfw = 0.5 * (panel.right - panel.left);
        for (std::size_t q = 0; q < quad.base.nodes.size(); ++q) {
            const double x = mid + halfw * quad.base.nodes[q];
            const double w = halfw * quad.base.weights[q];
            eval_point(coeffs, x, st);
            for (std::size_t i = 0; i < n; ++i) {
                theta[i] = trial_.basis[i](x);
                theta_dx[i] = basis_dx_[i](x);
            }

            // strong residual and gradient, weak-replaced terms excluded
            double r = -st.rhs;
            std::fill(dr.begin(), dr.end(), 0.0);
            double weak_flux = 0.0;   // sum of p(x) u' over weak terms
            double weak_coeff = 0.0;  // sum of p(x) over weak terms
            for (std::size_t t = 0; t < terms_.size(); ++t) {
                const TermData& td = terms_[t];
                if (td.weak) {
                    weak_flux += st.term_coeff[t] * st.trial_dx;
                    weak_coeff += st.term_coeff[t];
                    continue;
                }
                r += st.term_coeff[t] * pow_int(st.term_value[t], td.exponent);
                const double slope = st.term_coeff[t] * td.exponent *
                                     pow_int(st.term_value[t], td.exponent - 1);
                for (std::size_t j = 0; j < n; ++j)
                    dr[j] += slope * st.term_basis[t][j];
            }

            if (method_ == Method::LeastSquares) {
                for (std::size_t j = 0; j < n; ++j) {
                    f_out[j] += w * r * dr[j];
                    for (std::size_t k = 0; k < n; ++k) {
                        double d2 = 0.0;
                        for (std::size_t t = 0; t < terms_.size(); ++t) {
                            const TermData& td = terms_[t];
                            if (td.exponent < 2)
                                continue;
                            d2 += st.term_coeff[t] * td.exponent * (td.exponent - 1) *
                                  pow_int(st.term_value[t], td.exponent - 2) *
                                  st.term_basis[t][j] * st.term_basis[t][k];
                        }
                        j_out(j, k) += w * (dr[j] * dr[k] + r * d2);
                    }
                }
            } else {
                for (std::size_t i = 0; i < n; ++i) {
                    f_out[i] += w * (r * theta[i] - weak_flux * theta_dx[i]);
                    for (std::size_t j = 0; j < n; ++j)
                        j_out(i, j) += w * (dr[j] * theta[i] -
                                            weak_coeff * st.basis_dx[j] * theta_dx[i]);
                }
            }
        }
    }
}

NewtonResult newton_solve(const ResidualSystem& sys, const CompositeRule& quad,
                          const NewtonConfig& cfg)
{
    const std::size_t n = static_cast<std::size_t>(sys.dim());
    NewtonResult result;
    result.coeffs = cfg.initial_guess;
    result.coeffs.resize(n, 0.0);

    std::vector<double> f;
    Matrix jac;
    sys.assemble(result.coeffs, quad, f, jac);
    auto inf_norm = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v)
            m = std::max(m, std::fabs(x));
        return m;
    };
    result.residual_norm = inf_norm(f);

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        std::vector<double> negf(n);
        for (std::size_t i = 0; i < n; ++i)
            negf[i] = -f[i];
        const std::vector<double> step = lu_solve(jac, std::move(negf));

        double lambda = 1.0;
        std::vector<double> candidate(n);
        std::vector<double> f_cand;
        Matrix jac_cand;
        double cand_norm = 0.0;
        for (int halving = 0;; ++halving) {
            for (std::size_t i = 0; i < n; ++i)
                candidate[i] = result.coeffs[i] + lambda * step[i];
            sys.assemble(candidate, quad, f_cand, jac_cand);
            cand_norm = inf_norm(f_cand);
            if (cfg.damping == NewtonConfig::Damping::None ||
                cand_norm <= result.residual_norm || halving >= 20)
                break;
            lambda *= 0.5;
        }

        result.coeffs = candidate;
        f = std::move(f_cand);
        jac = std::move(jac_cand);
        result.residual_norm = cand_norm;
        result.iterations = iter;

        if (result.residual_norm <= cfg.residual_tol)
            break;
        double step_norm = 0.0;
        for (double s : step)
            step_norm = std::max(step_norm, std::fabs(lambda * s));
        if (step_norm <= cfg.step_tol)
            break;
    }
    result.converged = result.residual_norm <= cfg.residual_tol;
    return result;
}

Solution solve(const ProblemSpec& problem, Method method, BasisFamily family,
               int count, const SolveOptions& options)
{
    validate(problem);
    TrialSpace trial = build_trial_space(family, count, problem.bcs,
                                         problem.a, problem.b, options.bc_mode);
    ResidualSystem sys(method, std::move(trial), problem);
    const CompositeRule quad = make_composite(problem.a, problem.b, options.quad);
    const NewtonResult newton = newton_solve(sys, quad, options.newton);

    Solution sol;
    sol.method = method;
    sol.family = family;
    sol.count = count;
    sol.trial = sys.trial();
    sol.coeffs = newton.coeffs;
    sol.approx = sys.trial().lift;
    for (std::size_t j = 0; j < newton.coeffs.size(); ++j)
        sol.approx += sys.trial().basis[j].scaled(newton.coeffs[j]);
    sol.diagnostics = {newton.converged, newton.iterations, newton.residual_norm,
                       sys.dim()};
    return sol;
}

} // namespace fracbvp
