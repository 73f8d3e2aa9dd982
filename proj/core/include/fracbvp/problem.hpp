#ifndef FRACBVP_PROBLEM_HPP
#define FRACBVP_PROBLEM_HPP

#include "fracbvp/basis.hpp"
#include "fracbvp/expr.hpp"

#include <vector>

namespace fracbvp {

/// One operator summand coefficient(x) * (D^deriv_order u)^exponent.
/// Fractional orders are Caputo derivatives; order 0 is u itself.
struct OperatorTerm {
    ExprPtr coefficient;
    double deriv_order = 0.0;
    int exponent = 1;
};

/// sum of terms == rhs on (a,b), subject to bcs.
struct ProblemSpec {
    double a = 0.0;
    double b = 1.0;
    std::vector<OperatorTerm> terms;
    ExprPtr rhs;
    std::vector<BoundaryCondition> bcs;
    ExprPtr exact;   // optional
};

/// Highest derivative order appearing in the operator.
double highest_order(const ProblemSpec& p);

/// Number of boundary conditions a well-posed spec must carry: the integer
/// ceiling of the highest derivative order.
int required_bc_count(double max_order);

/// Enforces: a < b; non-empty terms with exponent >= 1 and deriv_order >= 0;
/// nonlinear terms (exponent > 1) only on integer derivative orders; rhs
/// present; bc count matching the operator order; bc orders below the
/// operator order. Throws DomainError.
void validate(const ProblemSpec& p);

/// Field-by-field equality with expressions compared by canonical printing.
bool structurally_equal(const ProblemSpec& lhs, const ProblemSpec& rhs);

} // namespace fracbvp

#endif
