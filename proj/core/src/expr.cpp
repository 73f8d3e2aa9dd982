#include "fracbvp/expr.hpp"

#include "fracbvp/errors.hpp"
#include "fracbvp/gamma.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>
#include <vector>

namespace fracbvp {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

ExprPtr node(Expr::Kind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr)
{
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

struct Token {
    enum class Kind { Number, X, Pi, Gamma, Plus, Minus, Star, Slash, Caret,
                      LParen, RParen, End };
    Kind kind;
    std::size_t pos;
    double value = 0.0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size())
            return {Token::Kind::End, start};
        const char c = text_[pos_];
        switch (c) {
        case '+': ++pos_; return {Token::Kind::Plus, start};
        case '-': ++pos_; return {Token::Kind::Minus, start};
        case '*': ++pos_; return {Token::Kind::Star, start};
        case '/': ++pos_; return {Token::Kind::Slash, start};
        case '^': ++pos_; return {Token::Kind::Caret, start};
        case '(': ++pos_; return {Token::Kind::LParen, start};
        case ')': ++pos_; return {Token::Kind::RParen, start};
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return lex_number(start);
        if (std::isalpha(static_cast<unsigned char>(c)))
            return lex_identifier(start);
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }

private:
    Token lex_number(std::size_t start)
    {
        std::size_t p = pos_;
        bool digits = false;
        while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
            ++p;
            digits = true;
        }
        if (p < text_.size() && text_[p] == '.') {
            ++p;
            while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                ++p;
                digits = true;
            }
        }
        if (!digits)
            throw ParseError(start, "malformed number");
        if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
            std::size_t q = p + 1;
            if (q < text_.size() && (text_[q] == '+' || text_[q] == '-'))
                ++q;
            if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
                while (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q])))
                    ++q;
                p = q;
            }
        }
        const std::string lit = text_.substr(start, p - start);
        pos_ = p;
        return {Token::Kind::Number, start, std::strtod(lit.c_str(), nullptr)};
    }

    Token lex_identifier(std::size_t start)
    {
        std::size_t p = pos_;
        while (p < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[p])) ||
                                    text_[p] == '_'))
            ++p;
        const std::string ident = text_.substr(start, p - start);
        pos_ = p;
        if (ident == "x")
            return {Token::Kind::X, start};
        if (ident == "pi")
            return {Token::Kind::Pi, start};
        if (ident == "gamma")
            return {Token::Kind::Gamma, start};
        throw ParseError(start, "unknown identifier '" + ident + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { advance(); }

    ExprPtr run()
    {
        ExprPtr e = parse_expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    void advance() { current_ = lexer_.next(); }

    void expect(Token::Kind kind, const char* what)
    {
        if (current_.kind != kind)
            throw ParseError(current_.pos, std::string("expected ") + what);
        advance();
    }

    ExprPtr parse_expr()
    {
        ExprPtr e = parse_term();
        while (current_.kind == Token::Kind::Plus || current_.kind == Token::Kind::Minus) {
            const auto op = current_.kind == Token::Kind::Plus ? Expr::Kind::Add
                                                               : Expr::Kind::Sub;
            advance();
            e = node(op, std::move(e), parse_term());
        }
        return e;
    }

    ExprPtr parse_term()
    {
        ExprPtr e = parse_unary();
        while (current_.kind == Token::Kind::Star || current_.kind == Token::Kind::Slash) {
            const auto op = current_.kind == Token::Kind::Star ? Expr::Kind::Mul
                                                               : Expr::Kind::Div;
            advance();
            e = node(op, std::move(e), parse_unary());
        }
        return e;
    }

    ExprPtr parse_unary()
    {
        if (current_.kind == Token::Kind::Minus) {
            advance();
            return node(Expr::Kind::Neg, parse_unary());
        }
        return parse_power();
    }

    ExprPtr parse_power()
    {
        ExprPtr base = parse_atom();
        if (current_.kind == Token::Kind::Caret) {
            advance();
            // right-associative; exponent may carry its own unary minus
            return node(Expr::Kind::Pow, std::move(base), parse_unary());
        }
        return base;
    }

    ExprPtr parse_atom()
    {
        switch (current_.kind) {
        case Token::Kind::Number: {
            ExprPtr e = make_number(current_.value);
            advance();
            return e;
        }
        case Token::Kind::X:
            advance();
            return node(Expr::Kind::Var);
        case Token::Kind::Pi:
            advance();
            return node(Expr::Kind::Pi);
        case Token::Kind::Gamma: {
            advance();
            expect(Token::Kind::LParen, "'(' after gamma");
            ExprPtr arg = parse_expr();
            expect(Token::Kind::RParen, "')'");
            return node(Expr::Kind::Gamma, std::move(arg));
        }
        case Token::Kind::LParen: {
            advance();
            ExprPtr e = parse_expr();
            expect(Token::Kind::RParen, "')'");
            return e;
        }
        default:
            throw ParseError(current_.pos, "expected number, 'x', 'pi', 'gamma', or '('");
        }
    }

    Lexer lexer_;
    Token current_{Token::Kind::End, 0};
};

} // namespace

ExprPtr make_number(double v)
{
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Number;
    e->value = v;
    return e;
}

ExprPtr parse(const std::string& text)
{
    if (text.empty())
        throw ParseError(0, "empty input");
    return Parser(text).run();
}

double eval_expr(const Expr& e, double x)
{
    switch (e.kind) {
    case Expr::Kind::Number:
        return e.value;
    case Expr::Kind::Var:
        return x;
    case Expr::Kind::Pi:
        return kPi;
    case Expr::Kind::Neg:
        return -eval_expr(*e.lhs, x);
    case Expr::Kind::Add:
        return eval_expr(*e.lhs, x) + eval_expr(*e.rhs, x);
    case Expr::Kind::Sub:
        return eval_expr(*e.lhs, x) - eval_expr(*e.rhs, x);
    case Expr::Kind::Mul:
        return eval_expr(*e.lhs, x) * eval_expr(*e.rhs, x);
    case Expr::Kind::Div: {
        const double denom = eval_expr(*e.rhs, x);
        if (denom == 0.0)
            throw EvalError("division by zero");
        return eval_expr(*e.lhs, x) / denom;
    }
    case Expr::Kind::Pow: {
        const double base = eval_expr(*e.lhs, x);
        const double exponent = eval_expr(*e.rhs, x);
        const bool integral_exp = snap_to_integer(exponent).has_value();
        if (base == 0.0 && exponent < 0.0)
            throw EvalError("zero raised to a negative power");
        if (base < 0.0 && !integral_exp)
            throw EvalError("fractional power of a negative base");
        return std::pow(base, exponent);
    }
    case Expr::Kind::Gamma: {
        const double arg = eval_expr(*e.lhs, x);
        try {
            return gamma_fn(arg);
        } catch (const DomainError& err) {
            throw EvalError(err.what());
        }
    }
    }
    throw EvalError("corrupt expression node");
}

std::string print_expr(const Expr& e)
{
    char buf[64];
    switch (e.kind) {
    case Expr::Kind::Number:
        // negative literals print in unary form so "^" cannot re-associate
        if (std::signbit(e.value)) {
            std::snprintf(buf, sizeof buf, "(-%.17g)", -e.value);
            return buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g", e.value);
        return buf;
    case Expr::Kind::Var:
        return "x";
    case Expr::Kind::Pi:
        return "pi";
    case Expr::Kind::Neg:
        return "(-" + print_expr(*e.lhs) + ")";
    case Expr::Kind::Add:
        return "(" + print_expr(*e.lhs) + " + " + print_expr(*e.rhs) + ")";
    case Expr::Kind::Sub:
        return "(" + print_expr(*e.lhs) + " - " + print_expr(*e.rhs) + ")";
    case Expr::Kind::Mul:
        return "(" + print_expr(*e.lhs) + " * " + print_expr(*e.rhs) + ")";
    case Expr::Kind::Div:
        return "(" + print_expr(*e.lhs) + " / " + print_expr(*e.rhs) + ")";
    case Expr::Kind::Pow:
        return "(" + print_expr(*e.lhs) + " ^ " + print_expr(*e.rhs) + ")";
    case Expr::Kind::Gamma:
        return "gamma(" + print_expr(*e.lhs) + ")";
    }
    return {};
}

namespace {

// working power-sum form; exponents may be negative until final conversion
using RawSum = std::vector<std::pair<double, double>>;   // (coeff, exponent)

void raw_add_term(RawSum& sum, double coeff, double exponent)
{
    if (coeff == 0.0)
        return;
    for (auto& [c, e] : sum)
        if (std::fabs(e - exponent) <= kExponentTol) {
            c += coeff;
            return;
        }
    sum.emplace_back(coeff, exponent);
}

std::optional<RawSum> lower(const Expr& e);

std::optional<double> lower_constant(const Expr& e)
{
    const auto sum = lower(e);
    if (!sum)
        return std::nullopt;
    if (sum->empty())
        return 0.0;
    if (sum->size() == 1 && std::fabs((*sum)[0].second) <= kExponentTol)
        return (*sum)[0].first;
    return std::nullopt;
}

std::optional<RawSum> lower(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Number:
        return RawSum{{e.value, 0.0}};
    case Expr::Kind::Var:
        return RawSum{{1.0, 1.0}};
    case Expr::Kind::Pi:
        return RawSum{{kPi, 0.0}};
    case Expr::Kind::Neg: {
        auto sum = lower(*e.lhs);
        if (!sum)
            return std::nullopt;
        for (auto& [c, _] : *sum)
            c = -c;
        return sum;
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
        const auto l = lower(*e.lhs);
        const auto r = lower(*e.rhs);
        if (!l || !r)
            return std::nullopt;
        RawSum out = *l;
        const double sign = e.kind == Expr::Kind::Add ? 1.0 : -1.0;
        for (const auto& [c, p] : *r)
            raw_add_term(out, sign * c, p);
        return out;
    }
    case Expr::Kind::Mul: {
        const auto l = lower(*e.lhs);
        const auto r = lower(*e.rhs);
        if (!l || !r)
            return std::nullopt;
        RawSum out;
        for (const auto& [cl, pl] : *l)
            for (const auto& [cr, pr] : *r)
                raw_add_term(out, cl * cr, pl + pr);
        return out;
    }
    case Expr::Kind::Div: {
        const auto l = lower(*e.lhs);
        const auto r = lower(*e.rhs);
        if (!l || !r || r->size() != 1)
            return std::nullopt;   // only monomial divisors stay power sums
        const auto [cd, pd] = (*r)[0];
        if (cd == 0.0)
            return std::nullopt;
        RawSum out;
        for (const auto& [c, p] : *l)
            raw_add_term(out, c / cd, p - pd);
        return out;
    }
    case Expr::Kind::Pow: {
        const auto base = lower(*e.lhs);
        const auto exponent = lower_constant(*e.rhs);
        if (!base || !exponent)
            return std::nullopt;
        if (base->empty()) {
            if (*exponent > 0.0)
                return RawSum{};
            if (*exponent == 0.0)
                return RawSum{{1.0, 0.0}};   // 0^0 := 1
            return std::nullopt;
        }
        if (base->size() == 1) {
            const auto [c, p] = (*base)[0];
            const bool integral = snap_to_integer(*exponent).has_value();
            if (c < 0.0 && !integral)
                return std::nullopt;
            if (c == 0.0) {
                if (*exponent > 0.0)
                    return RawSum{};
                if (*exponent == 0.0)
                    return RawSum{{1.0, 0.0}};   // 0^0 := 1
                return std::nullopt;
            }
            const double coeff = std::pow(c, *exponent);
            if (!std::isfinite(coeff))
                return std::nullopt;
            return RawSum{{coeff, p * *exponent}};
        }
        const auto k = snap_to_integer(*exponent);
        if (!k || *k < 0)
            return std::nullopt;
        double max_exp = 0.0;
        for (const auto& [_, p] : *base)
            max_exp = std::max(max_exp, std::fabs(p));
        if (max_exp * static_cast<double>(*k) > 12.0 + kExponentTol)
            return std::nullopt;   // expansion cap
        RawSum acc{{1.0, 0.0}};
        for (long long i = 0; i < *k; ++i) {
            RawSum next;
            for (const auto& [ca, pa] : acc)
                for (const auto& [cb, pb] : *base)
                    raw_add_term(next, ca * cb, pa + pb);
            acc = std::move(next);
        }
        return acc;
    }
    case Expr::Kind::Gamma: {
        const auto arg = lower_constant(*e.lhs);
        if (!arg)
            return std::nullopt;
        try {
            return RawSum{{gamma_fn(*arg), 0.0}};
        } catch (const DomainError&) {
            return std::nullopt;
        }
    }
    }
    return std::nullopt;
}

} // namespace

std::optional<FracSeries> to_frac_series(const Expr& e)
{
    const auto sum = lower(e);
    if (!sum)
        return std::nullopt;
    std::vector<FracTerm> terms;
    for (const auto& [c, p] : *sum) {
        if (!std::isfinite(c))
            return std::nullopt;
        if (p < -kExponentTol)
            return std::nullopt;
        if (c != 0.0)
            terms.push_back({c, std::max(p, 0.0)});
    }
    return FracSeries(std::move(terms));
}

} // namespace fracbvp
