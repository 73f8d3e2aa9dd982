#ifndef FRACBVP_BASIS_HPP
#define FRACBVP_BASIS_HPP

#include "fracbvp/polynomial.hpp"

#include <vector>

namespace fracbvp {

enum class BasisFamily { ModifiedLegendre, ModifiedBernoulli };

enum class BoundarySide { Left, Right };

/// u^(derivative_order)(location) == value
struct BoundaryCondition {
    BoundarySide location = BoundarySide::Left;
    int derivative_order = 0;
    double value = 0.0;
};

/// How derivative boundary conditions act on the basis: Constrain reduces the
/// raw family to the null space of the derivative constraint functionals,
/// LiftOnly absorbs them in the lift alone and leaves the family unchanged.
enum class DerivativeBcMode { Constrain, LiftOnly };

/// p_n(x) = [Ptilde_n(x) - (-1)^n] (x - 1) where Ptilde_n is the Rodrigues
/// form (1/n!) d^n/dx^n (x^2 - x)^n of the shifted Legendre polynomial on
/// [0,1]. Degree n+1, vanishes at both endpoints. Coefficients are exact
/// integers, accumulated in 64-bit; n in [1, 20].
Polynomial modified_legendre(int n);

/// Classical Bernoulli polynomial B_m(x) via the explicit double sum
///   sum_{n=0}^m 1/(n+1) sum_{k=0}^n (-1)^k C(n,k) (x+k)^m,
/// accumulated in exact rational arithmetic, converted to double once.
/// m in [0, 20].
Polynomial bernoulli_polynomial(int m);

/// B_m(x) - B_m(0); vanishes at x = 0 by construction and at x = 1 through
/// B_m(1) = B_m(0). m >= 2 (B_1(x) - B_1(0) = x fails the right endpoint).
Polynomial modified_bernoulli(int m);

/// Minimal-degree polynomial matching every (location, derivative_order,
/// value) triple; degree = len(bcs) - 1.
Polynomial boundary_lift(const std::vector<BoundaryCondition>& bcs, double a, double b);

/// Boundary lift plus a constrained basis satisfying every homogeneous
/// counterpart of the boundary conditions.
struct TrialSpace {
    Polynomial lift;
    std::vector<Polynomial> basis;
    BasisFamily family = BasisFamily::ModifiedLegendre;
    int raw_count = 0;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Raw family: Legendre p_1..p_count, Bernoulli Bt_2..Bt_{count+1}, affinely
/// mapped to [a,b]. Homogeneous constraints not automatically satisfied by
/// the family become rows of a constraint matrix whose null space is the
/// returned basis; dimension = count - rank.
TrialSpace build_trial_space(BasisFamily family, int count,
                             const std::vector<BoundaryCondition>& bcs,
                             double a, double b,
                             DerivativeBcMode mode = DerivativeBcMode::Constrain);

} // namespace fracbvp

#endif
