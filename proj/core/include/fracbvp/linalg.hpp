#ifndef FRACBVP_LINALG_HPP
#define FRACBVP_LINALG_HPP

#include <cstddef>
#include <vector>

namespace fracbvp {

/// Dense row-major matrix, sized for the small systems assembled here.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double max_abs() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

/// Partial-pivoted LU solve of A x = b for square A, dim <= 64.
/// Throws SingularMatrixError when a pivot falls below 1e-14 * max|A|.
std::vector<double> lu_solve(Matrix a, std::vector<double> b);

/// Orthogonal-free null-space basis of C (possibly rectangular) by
/// Gauss-Jordan with column pivoting. Each returned vector is scaled to unit
/// max-abs entry with its first nonzero entry positive. `tol` is relative to
/// max|C|.
std::vector<std::vector<double>> null_space(const Matrix& c, double tol = 1e-10);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(Matrix a);

} // namespace fracbvp

#endif
