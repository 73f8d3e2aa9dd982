#ifndef FRACBVP_BUILTIN_HPP
#define FRACBVP_BUILTIN_HPP

#include "fracbvp/problem.hpp"

namespace fracbvp {

/// The four built-in benchmark problems:
///   1: D^1.5 u - u^3 = f,                u(0) = -1, u(1) = 0,  exact x^1.9 - 1
///   2: D^1.5 u + 2(u')^2 + 8u = 0,       u(0) = 0,  u'(1) = -1, claimed exact x - x^2
///   3: D^3.5 u - u^2 = f (as given),     u(0)=u'(0)=0, u(1)=u'(1)=1, exact x^5-2x^4+2x^2
///   4: D^2 u + g1(x) D^1.2 u + g2(x) D^(1/6) u - (u')^2 = 2 + x^2/10,
///                                        u(0) = 1, u(1) = 2,  exact 1 + x^2
/// Throws DomainError for ids outside 1..4.
ProblemSpec builtin_problem(int id);

/// Problem 3 with the right-hand side remanufactured from the exact solution
/// under the Caputo derivative. The as-given rhs contains a -2*0.56*x^-1.5
/// term that equals the Riemann-Liouville image of the 2x^2 part of the
/// exact solution; Caputo annihilates that part, so the as-given equation is
/// not solved by the stated exact solution. This variant drops the spurious
/// term and uses full-precision gamma factors.
ProblemSpec builtin_problem3_caputo_consistent();

} // namespace fracbvp

#endif
