#include "fracbvp/basis.hpp"
#include "fracbvp/errors.hpp"
#include "fracbvp/linalg.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

using namespace fracbvp;

namespace {

// Brute-force Rodrigues oracle: expand (x^2 - x)^n by repeated convolution in
// exact 64-bit integers, differentiate n times, divide by n!, then apply
// [Ptilde_n - (-1)^n](x - 1). Independent of the closed-form construction.
std::vector<double> rodrigues_oracle(int n)
{
    std::vector<std::int64_t> poly{0, 0, 0};   // placeholder
    poly = {0, -1, 1};                         // x^2 - x
    std::vector<std::int64_t> acc{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> next(acc.size() + 2, 0);
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::size_t b = 0; b < 3; ++b)
                next[a + b] += acc[a] * poly[b];
        acc = std::move(next);
    }
    for (int d = 0; d < n; ++d) {
        std::vector<std::int64_t> der(acc.size() - 1, 0);
        for (std::size_t k = 1; k < acc.size(); ++k)
            der[k - 1] = acc[k] * static_cast<std::int64_t>(k);
        acc = std::move(der);
    }
    std::int64_t fact = 1;
    for (int i = 2; i <= n; ++i)
        fact *= i;
    std::vector<std::int64_t> q(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k)
        q[k] = acc[k] / fact;
    q[0] -= (n % 2 == 0) ? 1 : -1;
    // multiply by (x - 1)
    std::vector<double> out(q.size() + 1, 0.0);
    for (std::size_t k = 0; k < q.size(); ++k) {
        out[k + 1] += static_cast<double>(q[k]);
        out[k] -= static_cast<double>(q[k]);
    }
    return out;
}

BoundaryCondition dirichlet(BoundarySide side, double v)
{
    return {side, 0, v};
}

// Gram matrix over [0,1] from exact monomial integrals, with members scaled
// to unit L2 norm so the smallest eigenvalue measures independence rather
// than the integer scaling of the family.
Matrix gram(const std::vector<Polynomial>& basis)
{
    Matrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            double acc = 0.0;
            for (int p = 0; p <= basis[i].degree(); ++p)
                for (int q = 0; q <= basis[j].degree(); ++q)
                    acc += basis[i].coeff(p) * basis[j].coeff(q) / (p + q + 1.0);
            g(i, j) = acc;
        }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const double di = std::sqrt(g(i, i));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            g(i, j) /= di;
            g(j, i) /= di;
        }
    }
    return g;
}

} // namespace

TEST_CASE("modified Legendre family")
{
    const Polynomial p1 = modified_legendre(1);
    CHECK(p1.coeff(0) == 0.0);
    CHECK(p1.coeff(1) == -2.0);
    CHECK(p1.coeff(2) == 2.0);

    const Polynomial p2 = modified_legendre(2);
    CHECK(p2.coeff(1) == 6.0);
    CHECK(p2.coeff(2) == -12.0);
    CHECK(p2.coeff(3) == 6.0);

    for (int n = 1; n <= 8; ++n) {
        const Polynomial p = modified_legendre(n);
        const std::vector<double> oracle = rodrigues_oracle(n);
        CHECK(p.degree() == n + 1);
        REQUIRE(oracle.size() == static_cast<std::size_t>(n + 2));
        for (int k = 0; k <= p.degree(); ++k)
            CHECK(p.coeff(k) == oracle[static_cast<std::size_t>(k)]);
        CHECK(std::fabs(p(0.0)) <= 1e-12);
        CHECK(std::fabs(p(1.0)) <= 1e-12);
    }
    CHECK_THROWS_AS((void)modified_legendre(0), DomainError);
    CHECK_THROWS_AS((void)modified_legendre(21), DomainError);
}

TEST_CASE("Bernoulli polynomials by the double sum")
{
    const Polynomial b0 = bernoulli_polynomial(0);
    CHECK(b0.degree() == 0);
    CHECK(b0.coeff(0) == 1.0);

    const Polynomial b1 = bernoulli_polynomial(1);
    CHECK(b1.coeff(0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(b1.coeff(1) == 1.0);

    const Polynomial b2 = bernoulli_polynomial(2);
    CHECK(b2.coeff(0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(b2.coeff(1) == doctest::Approx(-1.0));
    CHECK(b2.coeff(2) == doctest::Approx(1.0));

    // difference identity B_m(x+1) - B_m(x) = m x^(m-1)
    for (int m = 1; m <= 8; ++m) {
        const Polynomial bm = bernoulli_polynomial(m);
        for (double x : {0.2, 0.7, 1.3})
            CHECK(bm(x + 1.0) - bm(x) ==
                  doctest::Approx(m * std::pow(x, m - 1)).epsilon(1e-12));
    }
    // endpoint identity B_m(1) = B_m(0) for m >= 2
    for (int m = 2; m <= 8; ++m) {
        const Polynomial bm = bernoulli_polynomial(m);
        CHECK(std::fabs(bm(1.0) - bm(0.0)) <= 1e-13);
    }
    CHECK_THROWS_AS((void)bernoulli_polynomial(-1), DomainError);
    CHECK_THROWS_AS((void)bernoulli_polynomial(21), DomainError);
}

TEST_CASE("modified Bernoulli family")
{
    const Polynomial m2 = modified_bernoulli(2);
    CHECK(m2.coeff(0) == 0.0);
    CHECK(m2.coeff(1) == doctest::Approx(-1.0));
    CHECK(m2.coeff(2) == doctest::Approx(1.0));

    const Polynomial m3 = modified_bernoulli(3);
    CHECK(m3.coeff(1) == doctest::Approx(0.5));
    CHECK(m3.coeff(2) == doctest::Approx(-1.5));
    CHECK(m3.coeff(3) == doctest::Approx(1.0));

    for (int m = 2; m <= 8; ++m) {
        const Polynomial b = modified_bernoulli(m);
        CHECK(b.degree() == m);
        CHECK(b(0.0) == 0.0);
        CHECK(std::fabs(b(1.0)) <= 1e-12);
    }
    CHECK_THROWS_AS((void)modified_bernoulli(1), DomainError);
}

TEST_CASE("boundary_lift")
{
    SUBCASE("two Dirichlet values")
    {
        const Polynomial lift = boundary_lift(
            {dirichlet(BoundarySide::Left, -1.0), dirichlet(BoundarySide::Right, 0.0)},
            0.0, 1.0);
        CHECK(lift.coeff(0) == doctest::Approx(-1.0));
        CHECK(lift.coeff(1) == doctest::Approx(1.0));

        const Polynomial lift2 = boundary_lift(
            {dirichlet(BoundarySide::Left, 1.0), dirichlet(BoundarySide::Right, 2.0)},
            0.0, 1.0);
        CHECK(lift2.coeff(0) == doctest::Approx(1.0));
        CHECK(lift2.coeff(1) == doctest::Approx(1.0));
    }
    SUBCASE("cubic Hermite through four conditions")
    {
        const std::vector<BoundaryCondition> bcs{{BoundarySide::Left, 0, 0.0},
                                                 {BoundarySide::Left, 1, 0.0},
                                                 {BoundarySide::Right, 0, 1.0},
                                                 {BoundarySide::Right, 1, 1.0}};
        const Polynomial lift = boundary_lift(bcs, 0.0, 1.0);
        CHECK(lift.degree() == 3);
        CHECK(std::fabs(lift(0.0)) <= 1e-12);
        CHECK(std::fabs(lift.derivative()(0.0)) <= 1e-12);
        CHECK(lift(1.0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(lift.derivative()(1.0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(lift.coeff(2) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(lift.coeff(3) == doctest::Approx(-1.0).epsilon(1e-12));
    }
    SUBCASE("contradictory conditions")
    {
        CHECK_THROWS_AS((void)boundary_lift({dirichlet(BoundarySide::Left, 0.0),
                                             dirichlet(BoundarySide::Left, 1.0)},
                                            0.0, 1.0),
                        SingularMatrixError);
    }
}

TEST_CASE("build_trial_space")
{
    SUBCASE("Dirichlet constraints are auto-satisfied")
    {
        const TrialSpace space = build_trial_space(
            BasisFamily::ModifiedLegendre, 3,
            {dirichlet(BoundarySide::Left, -1.0), dirichlet(BoundarySide::Right, 0.0)},
            0.0, 1.0);
        CHECK(space.dim() == 3);
        CHECK(space.raw_count == 3);
        // raw family passes through unchanged
        CHECK(space.basis[0].coeff(2) == 2.0);
        CHECK(space.basis[2].degree() == 4);
    }
    SUBCASE("derivative constraints reduce the dimension")
    {
        const std::vector<BoundaryCondition> bcs{{BoundarySide::Left, 0, 0.0},
                                                 {BoundarySide::Left, 1, 0.0},
                                                 {BoundarySide::Right, 0, 1.0},
                                                 {BoundarySide::Right, 1, 1.0}};
        const TrialSpace space =
            build_trial_space(BasisFamily::ModifiedLegendre, 5, bcs, 0.0, 1.0);
        CHECK(space.dim() == 3);   // 5 - rank of the two derivative constraints
        for (const Polynomial& theta : space.basis) {
            CHECK(std::fabs(theta(0.0)) <= 1e-12);
            CHECK(std::fabs(theta(1.0)) <= 1e-12);
            CHECK(std::fabs(theta.derivative()(0.0)) <= 1e-12);
            CHECK(std::fabs(theta.derivative()(1.0)) <= 1e-12);
        }
        SUBCASE("lift-only mode keeps the raw family")
        {
            const TrialSpace loose =
                build_trial_space(BasisFamily::ModifiedLegendre, 5, bcs, 0.0, 1.0,
                                  DerivativeBcMode::LiftOnly);
            CHECK(loose.dim() == 5);
        }
    }
    SUBCASE("constraints can exhaust the family")
    {
        // one member, one active derivative constraint: rank == count
        CHECK_THROWS_AS((void)build_trial_space(BasisFamily::ModifiedLegendre, 1,
                                                {{BoundarySide::Left, 0, 0.0},
                                                 {BoundarySide::Right, 1, 0.0}},
                                                0.0, 1.0),
                        DomainError);
    }
    SUBCASE("homogeneous Dirichlet with Bernoulli family")
    {
        const TrialSpace space = build_trial_space(
            BasisFamily::ModifiedBernoulli, 3,
            {dirichlet(BoundarySide::Left, 0.0), dirichlet(BoundarySide::Right, 0.0)},
            0.0, 1.0);
        CHECK(space.lift.is_zero());
        CHECK(space.dim() == 3);
        CHECK(space.basis[0].degree() == 2);
        CHECK(space.basis[2].degree() == 4);
    }
}

TEST_CASE("trial-space invariants across families and sizes")
{
    for (BasisFamily family :
         {BasisFamily::ModifiedLegendre, BasisFamily::ModifiedBernoulli}) {
        for (int count : {2, 4, 8}) {
            const TrialSpace space = build_trial_space(
                family, count,
                {dirichlet(BoundarySide::Left, -1.0), dirichlet(BoundarySide::Right, 0.5)},
                0.0, 1.0);
            // endpoint annihilation
            for (const Polynomial& theta : space.basis) {
                CHECK(std::fabs(theta(0.0)) <= 1e-12);
                CHECK(std::fabs(theta(1.0)) <= 1e-12);
            }
            // lift exactness
            CHECK(std::fabs(space.lift(0.0) + 1.0) <= 1e-12);
            CHECK(std::fabs(space.lift(1.0) - 0.5) <= 1e-12);
            // linear independence: smallest Gram eigenvalue
            const auto eig = symmetric_eigenvalues(gram(space.basis));
            CHECK(eig.front() > 1e-10);
        }
    }
}
