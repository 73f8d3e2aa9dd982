#ifndef FRACBVP_EXPR_HPP
#define FRACBVP_EXPR_HPP

#include "fracbvp/frac_series.hpp"

#include <memory>
#include <optional>
#include <string>

namespace fracbvp {

/// Immutable expression tree over: number literals, the variable x, pi,
/// binary + - * / ^, unary minus, and gamma(.). ^ is right-associative and
/// binds tighter than unary minus: -x^2 parses as -(x^2).
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Var, Pi, Neg, Add, Sub, Mul, Div, Pow, Gamma };

    Kind kind;
    double value = 0.0;   // Number only
    ExprPtr lhs;          // operand of Neg/Gamma, left of binary ops
    ExprPtr rhs;          // right of binary ops
};

ExprPtr make_number(double v);

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' unary)?
///   atom   := number | 'x' | 'pi' | 'gamma' '(' expr ')' | '(' expr ')'
/// Throws ParseError with byte offset and the expected-token set.
ExprPtr parse(const std::string& text);

/// IEEE double evaluation; gamma delegates to gamma_fn. Throws EvalError on
/// division by zero, gamma poles/overflow, 0^negative, and fractional powers
/// of negative bases.
double eval_expr(const Expr& e, double x);
inline double eval_expr(const ExprPtr& e, double x) { return eval_expr(*e, x); }

/// Canonical fully parenthesized rendering; parse(print_expr(e)) evaluates
/// identically to e.
std::string print_expr(const Expr& e);
inline std::string print_expr(const ExprPtr& e) { return print_expr(*e); }

/// Lowers e to a finite power sum c1 x^p1 + ... + ck x^pk when it is
/// algebraically one with foldable constant coefficients and exponents.
/// Integer powers of multi-term sums expand up to total degree 12. Returns
/// nullopt (not an error) otherwise; the caller falls back to pointwise
/// evaluation.
std::optional<FracSeries> to_frac_series(const Expr& e);
inline std::optional<FracSeries> to_frac_series(const ExprPtr& e)
{
    return to_frac_series(*e);
}

} // namespace fracbvp

#endif
