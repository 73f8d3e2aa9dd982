#include "fracbvp/linalg.hpp"

#include "fracbvp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace fracbvp {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

double Matrix::max_abs() const
{
    double m = 0.0;
    for (double v : data_)
        m = std::max(m, std::fabs(v));
    return m;
}

std::vector<double> lu_solve(Matrix a, std::vector<double> b)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw DomainError("lu_solve: shape mismatch");
    if (n > 64)
        throw DomainError("lu_solve: dimension " + std::to_string(n) + " exceeds 64");
    const double pivot_floor = 1e-14 * std::max(a.max_abs(), 1e-300);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(piv, col)))
                piv = r;
        if (std::fabs(a(piv, col)) < pivot_floor)
            throw SingularMatrixError("lu_solve: pivot below threshold at column " +
                                      std::to_string(col));
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(piv, j), a(col, j));
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a(r, col) / a(col, col);
            if (factor == 0.0)
                continue;
            a(r, col) = 0.0;
            for (std::size_t j = col + 1; j < n; ++j)
                a(r, j) -= factor * a(col, j);
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

std::vector<std::vector<double>> null_space(const Matrix& c, double tol)
{
    const std::size_t rows = c.rows(), cols = c.cols();
    Matrix m = c;
    const double threshold = std::max(tol * std::max(m.max_abs(), 1.0), 1e-300);

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        for (std::size_t r = rank + 1; r < rows; ++r)
            if (std::fabs(m(r, col)) > std::fabs(m(piv, col)))
                piv = r;
        if (std::fabs(m(piv, col)) <= threshold)
            continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(piv, j), m(rank, j));
        const double inv = 1.0 / m(rank, col);
        for (std::size_t j = 0; j < cols; ++j)
            m(rank, j) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank)
                continue;
            const double f = m(r, col);
            if (f == 0.0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                m(r, j) -= f * m(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivot_col)
        is_pivot[p] = true;

    std::vector<std::vector<double>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<double> v(cols, 0.0);
        v[free] = 1.0;
        for (std::size_t r = 0; r < rank; ++r)
            v[pivot_col[r]] = -m(r, free);
        double scale = 0.0;
        for (double x : v)
            scale = std::max(scale, std::fabs(x));
        double sign = 1.0;
        for (double x : v)
            if (x != 0.0) {
                sign = x > 0.0 ? 1.0 : -1.0;
                break;
            }
        for (double& x : v)
            x *= sign / scale;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<double> symmetric_eigenvalues(Matrix a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n)
        throw DomainError("symmetric_eigenvalues: matrix not square");
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                off += a(i, j) * a(i, j);
        if (off < 1e-30 * std::max(1.0, a.max_abs() * a.max_abs()))
            break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0)
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double cs = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * cs;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = cs * akp - sn * akq;
                    a(k, q) = sn * akp + cs * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = cs * apk - sn * aqk;
                    a(q, k) = sn * apk + cs * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i)
        eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace fracbvp
