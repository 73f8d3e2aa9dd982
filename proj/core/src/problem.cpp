#include "fracbvp/problem.hpp"

#include "fracbvp/errors.hpp"

#include <cmath>
#include <string>

namespace fracbvp {

double highest_order(const ProblemSpec& p)
{
    double m = 0.0;
    for (const OperatorTerm& t : p.terms)
        m = std::max(m, t.deriv_order);
    return m;
}

int required_bc_count(double max_order)
{
    if (const auto m = snap_to_integer(max_order))
        return static_cast<int>(*m);
    return static_cast<int>(std::ceil(max_order));
}

void validate(const ProblemSpec& p)
{
    if (!(p.a < p.b))
        throw DomainError("problem: requires a < b");
    if (p.terms.empty())
        throw DomainError("problem: operator has no terms");
    if (!p.rhs)
        throw DomainError("problem: missing rhs");
    for (const OperatorTerm& t : p.terms) {
        if (!t.coefficient)
            throw DomainError("problem: term missing coefficient");
        if (t.exponent < 1)
            throw DomainError("problem: term exponent must be >= 1");
        if (t.deriv_order < 0.0)
            throw DomainError("problem: negative derivative order");
        if (t.exponent > 1 && !snap_to_integer(t.deriv_order))
            throw DomainError("problem: nonlinear terms require integer derivative order");
    }
    const double max_order = highest_order(p);
    const int needed = required_bc_count(max_order);
    if (static_cast<int>(p.bcs.size()) != needed)
        throw DomainError("problem: " + std::to_string(p.bcs.size()) +
                          " boundary conditions, operator of order " +
                          std::to_string(max_order) + " needs " + std::to_string(needed));
    for (const BoundaryCondition& bc : p.bcs) {
        if (bc.derivative_order < 0)
            throw DomainError("problem: negative boundary-condition order");
        if (static_cast<double>(bc.derivative_order) >= max_order)
            throw DomainError("problem: boundary condition of order " +
                              std::to_string(bc.derivative_order) +
                              " not below operator order");
    }
}

namespace {

bool expr_equal(const ExprPtr& a, const ExprPtr& b)
{
    if (!a || !b)
        return !a && !b;
    return print_expr(a) == print_expr(b);
}

} // namespace

bool structurally_equal(const ProblemSpec& lhs, const ProblemSpec& rhs)
{
    if (lhs.a != rhs.a || lhs.b != rhs.b)
        return false;
    if (lhs.terms.size() != rhs.terms.size() || lhs.bcs.size() != rhs.bcs.size())
        return false;
    for (std::size_t i = 0; i < lhs.terms.size(); ++i) {
        const OperatorTerm& l = lhs.terms[i];
        const OperatorTerm& r = rhs.terms[i];
        if (l.deriv_order != r.deriv_order || l.exponent != r.exponent ||
            !expr_equal(l.coefficient, r.coefficient))
            return false;
    }
    for (std::size_t i = 0; i < lhs.bcs.size(); ++i) {
        const BoundaryCondition& l = lhs.bcs[i];
        const BoundaryCondition& r = rhs.bcs[i];
        if (l.location != r.location || l.derivative_order != r.derivative_order ||
            l.value != r.value)
            return false;
    }
    return expr_equal(lhs.rhs, rhs.rhs) && expr_equal(lhs.exact, rhs.exact);
}

} // namespace fracbvp
