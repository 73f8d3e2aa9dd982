#ifndef FRACBVP_WRM_HPP
#define FRACBVP_WRM_HPP

#include "fracbvp/basis.hpp"
#include "fracbvp/linalg.hpp"
#include "fracbvp/problem.hpp"
#include "fracbvp/quadrature.hpp"

#include <span>
#include <string>
#include <vector>

namespace fracbvp {

enum class Method { Galerkin, GalerkinWeak, LeastSquares, Collocation };

std::string method_name(Method m);

/// Grid points x_j = (a + j)/(n + 1), j = 1..n.
std::vector<double> collocation_grid(double a, int n);

struct NewtonConfig {
    enum class Damping { None, Halving };

    int max_iters = 50;
    double step_tol = 1e-12;
    double residual_tol = 1e-12;
    Damping damping = Damping::Halving;
    std::vector<double> initial_guess;   // zero-padded to the system dimension
};

struct NewtonResult {
    std::vector<double> coeffs;
    int iterations = 0;
    double residual_norm = 0.0;
    bool converged = false;   // true iff final ||F||_inf <= residual_tol
};

/// The per-method nonlinear algebraic system F(a) = 0 with analytic Jacobian.
/// Fractional images of the lift and every basis member are precomputed once
/// per derivative order; residual evaluation costs only series evaluations.
class ResidualSystem {
public:
    ResidualSystem(Method method, TrialSpace trial, ProblemSpec problem);

    Method method() const { return method_; }
    int dim() const { return static_cast<int>(trial_.basis.size()); }
    const TrialSpace& trial() const { return trial_; }
    const ProblemSpec& problem() const { return problem_; }
    const std::vector<double>& collocation_points() const { return collocation_points_; }

    /// Strong-form residual of the trial function at x.
    double residual_at(std::span<const double> coeffs, double x) const;

    /// F and the analytic Jacobian at the given coefficients. For Galerkin
    /// variants and least squares the entries are composite-rule integrals;
    /// collocation ignores the rule.
    void assemble(std::span<const double> coeffs, const CompositeRule& quad,
                  std::vector<double>& f_out, Matrix& j_out) const;

private:
    struct TermData {
        ExprPtr coefficient;
        int exponent;
        bool weak;                        // p(x) u'' with exponent 1 under GalerkinWeak
        FracSeries lift_image;
        std::vector<FracSeries> basis_images;
    };

    struct PointState;
    void eval_point(std::span<const double> coeffs, double x, PointState& st) const;

    Method method_;
    TrialSpace trial_;
    ProblemSpec problem_;
    std::vector<TermData> terms_;
    Polynomial lift_dx_;
    std::vector<Polynomial> basis_dx_;
    std::vector<double> collocation_points_;
};

NewtonResult newton_solve(const ResidualSystem& sys, const CompositeRule& quad,
                          const NewtonConfig& cfg = {});

struct SolveOptions {
    QuadratureConfig quad;
    NewtonConfig newton;
    DerivativeBcMode bc_mode = DerivativeBcMode::Constrain;
};

struct Diagnostics {
    bool converged = false;
    int iterations = 0;
    double residual_norm = 0.0;
    int dim = 0;
};

struct Solution {
    Method method;
    BasisFamily family;
    int count = 0;
    TrialSpace trial;
    std::vector<double> coeffs;
    Polynomial approx;   // lift + sum of coeffs * basis, dense
    Diagnostics diagnostics;
};

/// End-to-end: trial space, fractional precomputation, assembly, Newton.
/// A non-converged run is returned with diagnostics.converged == false,
/// never silently.
Solution solve(const ProblemSpec& problem, Method method, BasisFamily family,
               int count, const SolveOptions& options = {});

} // namespace fracbvp

#endif
