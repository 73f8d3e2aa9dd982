#include "fracbvp/polynomial.hpp"

#include "fracbvp/frac_series.hpp"

#include <utility>

namespace fracbvp {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::monomial(double coeff, int power)
{
    if (coeff == 0.0)
        return {};
    std::vector<double> c(static_cast<std::size_t>(power) + 1, 0.0);
    c.back() = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0.0)
        coeffs_.pop_back();
}

double Polynomial::operator()(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double Polynomial::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return 0.0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * static_cast<double>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::derivative(int m) const
{
    Polynomial p = *this;
    for (int i = 0; i < m; ++i)
        p = p.derivative();
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), 0.0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs)
{
    lhs += rhs;
    return lhs;
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs)
{
    return lhs + rhs.scaled(-1.0);
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<double> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(double s) const
{
    std::vector<double> c = coeffs_;
    for (double& v : c)
        v *= s;
    return Polynomial(std::move(c));
}

FracSeries Polynomial::to_series() const
{
    std::vector<FracTerm> terms;
    terms.reserve(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0.0)
            terms.push_back({coeffs_[k], static_cast<double>(k)});
    return FracSeries(std::move(terms));
}

} // namespace fracbvp
