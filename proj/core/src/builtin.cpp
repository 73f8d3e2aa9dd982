#include "fracbvp/builtin.hpp"

#include "fracbvp/errors.hpp"

#include <string>

namespace fracbvp {
namespace {

OperatorTerm term(const std::string& coefficient, double order, int exponent)
{
    return {parse(coefficient), order, exponent};
}

BoundaryCondition bc(BoundarySide side, int order, double value)
{
    return {side, order, value};
}

} // namespace

ProblemSpec builtin_problem(int id)
{
    ProblemSpec p;
    switch (id) {
    case 1:
        p.terms = {term("1", 1.5, 1), term("-1", 0.0, 3)};
        p.rhs = parse("gamma(2.9)/gamma(1.4)*x^0.4 - (x^1.9 - 1)^3");
        p.bcs = {bc(BoundarySide::Left, 0, -1.0), bc(BoundarySide::Right, 0, 0.0)};
        p.exact = parse("x^1.9 - 1");
        break;
    case 2:
        // D^1.5 u = -2(u')^2 - 8u, stated with everything moved left
        p.terms = {term("1", 1.5, 1), term("2", 1.0, 2), term("8", 0.0, 1)};
        p.rhs = parse("0");
        p.bcs = {bc(BoundarySide::Left, 0, 0.0), bc(BoundarySide::Right, 1, -1.0)};
        p.exact = parse("x - x^2");
        break;
    case 3:
        p.terms = {term("1", 3.5, 1), term("-1", 0.0, 2)};
        p.rhs = parse("90.27*x^1.5 - 2*27.08*x^0.5 - 2*0.56/x^1.5"
                      " - x^10 + 4*x^9 - 4*x^8 - 4*x^7 + 8*x^6 - 4*x^4");
        p.bcs = {bc(BoundarySide::Left, 0, 0.0), bc(BoundarySide::Left, 1, 0.0),
                 bc(BoundarySide::Right, 0, 1.0), bc(BoundarySide::Right, 1, 1.0)};
        p.exact = parse("x^5 - 2*x^4 + 2*x^2");
        break;
    case 4:
        p.terms = {term("1", 2.0, 1),
                   term("gamma(4/5)*x^(6/5)", 1.2, 1),
                   term("11/9*gamma(5/6)*x^(1/6)", 1.0 / 6.0, 1),
                   term("-1", 1.0, 2)};
        p.rhs = parse("2 + x^2/10");
        p.bcs = {bc(BoundarySide::Left, 0, 1.0), bc(BoundarySide::Right, 0, 2.0)};
        p.exact = parse("1 + x^2");
        break;
    default:
        throw DomainError("builtin_problem: unknown id " + std::to_string(id));
    }
    validate(p);
    return p;
}

ProblemSpec builtin_problem3_caputo_consistent()
{
    ProblemSpec p = builtin_problem(3);
    p.rhs = parse("gamma(6)/gamma(2.5)*x^1.5 - 2*gamma(5)/gamma(1.5)*x^0.5"
                  " - x^10 + 4*x^9 - 4*x^8 - 4*x^7 + 8*x^6 - 4*x^4");
    validate(p);
    return p;
}

} // namespace fracbvp
