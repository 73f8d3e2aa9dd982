#ifndef FRACBVP_FRAC_SERIES_HPP
#define FRACBVP_FRAC_SERIES_HPP

#include <optional>
#include <vector>

namespace fracbvp {

/// coeff * x^exponent with exponent >= 0.
struct FracTerm {
    double coeff = 0.0;
    double exponent = 0.0;
};

/// Exponents within this distance of an integer are treated as that integer
/// (annihilation rule, pole detection, exponent merging).
inline constexpr double kExponentTol = 1e-12;

/// Nearest integer if within kExponentTol, else nullopt.
std::optional<long long> snap_to_integer(double x);

/// Finite sum of c * x^p terms with real exponents p >= 0, kept sorted by
/// strictly increasing exponent. Terms closer than kExponentTol in exponent
/// are merged; exactly-zero coefficients are dropped.
class FracSeries {
public:
    FracSeries() = default;
    explicit FracSeries(std::vector<FracTerm> terms);

    static FracSeries monomial(double coeff, double exponent);

    const std::vector<FracTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// 0^0 := 1; terms with exponent in (0,1) evaluate to 0 at x = 0.
    double eval(double x) const;

    FracSeries scaled(double s) const;
    friend FracSeries operator+(const FracSeries& a, const FracSeries& b);
    friend FracSeries operator-(const FracSeries& a, const FracSeries& b);

private:
    std::vector<FracTerm> terms_;
};

/// alpha > 0 with n_ceil = ceil(alpha); integer alpha has n_ceil == alpha.
struct FracOrder {
    double alpha;
    int n_ceil;

    explicit FracOrder(double alpha_);
};

/// Caputo derivative of a single term by the monomial rule
///   D^a x^p = Gamma(p+1)/Gamma(p+1-a) x^(p-a),
/// with integer exponents p < n_ceil annihilated. Non-integer exponents
/// require p > n_ceil - 1 (integrability of the defining integral).
FracSeries caputo_term(const FracTerm& t, const FracOrder& order);

/// Term-by-term Caputo derivative, renormalized.
FracSeries caputo_series(const FracSeries& s, const FracOrder& order);

/// Riemann-Liouville image split into the representable part (exponents >= 0)
/// and the singular part (exponents < 0, e.g. the image of a constant).
struct RlResult {
    FracSeries regular;
    std::vector<FracTerm> singular_terms;   // exponent < 0, unrepresentable
    bool is_singular() const { return !singular_terms.empty(); }
};

/// Riemann-Liouville derivative: no annihilation of low-order integer terms;
/// a term whose coefficient hits a pole of 1/Gamma maps to zero (kernel).
/// Requires p - alpha > -1 for every term.
RlResult riemann_liouville_series(const FracSeries& s, const FracOrder& order);

/// Exact m-fold classical derivative. Integer exponents p < m annihilate;
/// non-integer exponents use the falling product p(p-1)...(p-m+1) and must
/// keep the result exponent >= 0.
FracSeries diff_series(const FracSeries& s, int m);

inline double eval_series(const FracSeries& s, double x) { return s.eval(x); }

/// Evaluates the Caputo integral definition directly,
///   1/Gamma(n-a) * integral_0^x (x-y)^(n-a-1) s^(n)(y) dy,
/// by graded quadrature (panels shrinking toward both endpoints) with a
/// panel-doubling error check. Absolute error <= 1e-9.
double caputo_numeric_oracle(const FracSeries& s, const FracOrder& order, double x);

} // namespace fracbvp

#endif
