#include "fracbvp/basis.hpp"

#include "fracbvp/errors.hpp"
#include "fracbvp/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

namespace fracbvp {
namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

std::int64_t binomial64(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::int64_t acc = 1;
    for (int i = 1; i <= k; ++i)
        acc = acc * (n - k + i) / i;
    return acc;
}

BigInt binomial_big(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt acc = 1;
    for (int i = 1; i <= k; ++i)
        acc = acc * (n - k + i) / i;
    return acc;
}

// affine substitution x -> s*x + t
Polynomial compose_affine(const Polynomial& p, double s, double t)
{
    Polynomial result;
    const Polynomial arg({t, s});
    for (int k = p.degree(); k >= 0; --k)
        result = result * arg + Polynomial::monomial(p.coeff(k), 0);
    return result;
}

double apply_functional(const Polynomial& p, const BoundaryCondition& bc, double a, double b)
{
    const double loc = bc.location == BoundarySide::Left ? a : b;
    return p.derivative(bc.derivative_order)(loc);
}

} // namespace

Polynomial modified_legendre(int n)
{
    if (n < 1)
        throw DomainError("modified_legendre: family starts at n = 1");
    if (n > 20)
        throw DomainError("modified_legendre: n > 20 overflows exact coefficients");

    // Ptilde_n coefficient of x^(n-k) is (-1)^k C(n,k) C(2n-k,n), exact in int64
    std::vector<double> q(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        const std::int64_t c = binomial64(n, k) * binomial64(2 * n - k, n);
        q[static_cast<std::size_t>(n - k)] = (k % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(c);
    }
    q[0] -= (n % 2 == 0 ? 1.0 : -1.0);   // subtract (-1)^n; constant becomes exactly 0
    return Polynomial(std::move(q)) * Polynomial({-1.0, 1.0});
}

Polynomial bernoulli_polynomial(int m)
{
    if (m < 0)
        throw DomainError("bernoulli_polynomial: m must be nonnegative");
    if (m > 20)
        throw DomainError("bernoulli_polynomial: m > 20 overflows the binomial sum");

    std::vector<BigRat> coeffs(static_cast<std::size_t>(m) + 1, BigRat(0));
    for (int n = 0; n <= m; ++n) {
        for (int k = 0; k <= n; ++k) {
            // (x+k)^m expanded binomially; sign (-1)^k, weight C(n,k)/(n+1)
            const BigInt cnk = binomial_big(n, k);
            for (int j = 0; j <= m; ++j) {
                BigInt kpow = 1;
                for (int i = 0; i < m - j; ++i)
                    kpow *= k;
                BigRat term(binomial_big(m, j) * cnk * kpow, BigInt(n + 1));
                if (k % 2 == 1)
                    term = -term;
                coeffs[static_cast<std::size_t>(j)] += term;
            }
        }
    }
    std::vector<double> out(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        out[j] = static_cast<double>(coeffs[j]);
    return Polynomial(std::move(out));
}

Polynomial modified_bernoulli(int m)
{
    if (m < 2)
        throw DomainError("modified_bernoulli: m >= 2 required (B_1 - B_1(0) = x "
                          "does not vanish at the right endpoint)");
    const Polynomial b = bernoulli_polynomial(m);
    return b - Polynomial::monomial(b.coeff(0), 0);
}

Polynomial boundary_lift(const std::vector<BoundaryCondition>& bcs, double a, double b)
{
    if (bcs.empty())
        throw DomainError("boundary_lift: no boundary conditions");
    const std::size_t n = bcs.size();
    Matrix m(n, n);
    std::vector<double> rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
        const double loc = bcs[r].location == BoundarySide::Left ? a : b;
        const int k = bcs[r].derivative_order;
        for (std::size_t j = 0; j < n; ++j) {
            double falling = 1.0;
            for (int i = 0; i < k; ++i)
                falling *= static_cast<double>(j) - i;
            m(r, j) = falling == 0.0 ? 0.0
                                     : falling * std::pow(loc, static_cast<double>(j) - k);
        }
        rhs[r] = bcs[r].value;
    }
    std::vector<double> coeffs;
    try {
        coeffs = lu_solve(std::move(m), std::move(rhs));
    } catch (const SingularMatrixError&) {
        throw SingularMatrixError("boundary_lift: dependent or contradictory conditions");
    }
    return Polynomial(std::move(coeffs));
}

TrialSpace build_trial_space(BasisFamily family, int count,
                             const std::vector<BoundaryCondition>& bcs,
                             double a, double b, DerivativeBcMode mode)
{
    if (count < 1)
        throw DomainError("build_trial_space: count >= 1 required");
    if (!(a < b))
        throw DomainError("build_trial_space: requires a < b");

    TrialSpace space;
    space.family = family;
    space.raw_count = count;
    space.lift = bcs.empty() ? Polynomial{} : boundary_lift(bcs, a, b);

    for (const BoundaryCondition& bc : bcs) {
        const double got = apply_functional(space.lift, bc, a, b);
        if (std::fabs(got - bc.value) > 1e-12)
            throw Error("build_trial_space: lift misses a boundary condition by " +
                        std::to_string(got - bc.value));
    }

    std::vector<Polynomial> raw;
    raw.reserve(static_cast<std::size_t>(count));
    const double scale = 1.0 / (b - a);
    for (int i = 0; i < count; ++i) {
        Polynomial member = family == BasisFamily::ModifiedLegendre
                                ? modified_legendre(i + 1)
                                : modified_bernoulli(i + 2);
        if (a != 0.0 || b != 1.0)
            member = compose_affine(member, scale, -a * scale);
        raw.push_back(std::move(member));
    }

    // homogeneous constraints the raw family does not already satisfy
    std::vector<BoundaryCondition> active;
    for (const BoundaryCondition& bc : bcs) {
        if (mode == DerivativeBcMode::LiftOnly && bc.derivative_order > 0)
            continue;
        double worst = 0.0;
        for (const Polynomial& member : raw)
            worst = std::max(worst, std::fabs(apply_functional(member, bc, a, b)));
        if (worst > 1e-12)
            active.push_back(bc);
    }

    if (active.empty()) {
        space.basis = std::move(raw);
        return space;
    }

    Matrix constraints(active.size(), raw.size());
    for (std::size_t r = 0; r < active.size(); ++r)
        for (std::size_t j = 0; j < raw.size(); ++j)
            constraints(r, j) = apply_functional(raw[j], active[r], a, b);

    const auto combos = null_space(constraints);
    if (combos.empty())
        throw DomainError("build_trial_space: constraints exhaust the family "
                          "(rank equals count)");

    for (const auto& v : combos) {
        Polynomial member;
        for (std::size_t j = 0; j < raw.size(); ++j)
            if (v[j] != 0.0)
                member += raw[j].scaled(v[j]);
        space.basis.push_back(std::move(member));
    }

    for (const Polynomial& member : space.basis)
        for (const BoundaryCondition& bc : bcs) {
            if (mode == DerivativeBcMode::LiftOnly && bc.derivative_order > 0)
                continue;
            if (std::fabs(apply_functional(member, bc, a, b)) > 1e-12)
                throw Error("build_trial_space: constrained member violates a "
                            "homogeneous boundary condition");
        }
    return space;
}

} // namespace fracbvp
