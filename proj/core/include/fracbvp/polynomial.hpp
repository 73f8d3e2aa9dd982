#ifndef FRACBVP_POLYNOMIAL_HPP
#define FRACBVP_POLYNOMIAL_HPP

#include <vector>

namespace fracbvp {

class FracSeries;

/// Dense polynomial, coeffs_[k] is the coefficient of x^k.
/// Trailing zero coefficients are trimmed; the zero polynomial has no
/// coefficients and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial monomial(double coeff, int power);

    const std::vector<double>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    double operator()(double x) const;       // Horner
    double coeff(int k) const;                // 0 beyond degree

    Polynomial derivative() const;
    Polynomial derivative(int m) const;

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
    friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    Polynomial scaled(double s) const;

    FracSeries to_series() const;

private:
    void trim();
    std::vector<double> coeffs_;
};

} // namespace fracbvp

#endif
