#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace pcade {

using Vector = std::vector<double>;

/// Dense row-major matrix. Only what PCA needs; not a general BLAS.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const double> values);

    Matrix transpose() const;
    double frobenius_norm() const;
    double max_abs() const;

    std::span<const double> data() const { return data_; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, std::span<const double> x);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct MeanCovariance {
    Vector mean;
    Matrix covariance; ///< unbiased, 1/(k-1) normalisation
};

/// m = (1/k) sum x_i,  Sigma = 1/(k-1) sum (x_i - m)(x_i - m)^T.
/// Requires k >= 2 points of equal length.
MeanCovariance mean_covariance(std::span<const Vector> points);

struct SymmetricEigen {
    Vector values;   ///< descending
    Matrix vectors;  ///< column j pairs with values[j]; orthonormal
    int sweeps = 0;
};

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Stops when the off-diagonal Frobenius norm falls below
/// 1e-12 * (1 + ||A||_F), or after 100 sweeps. Eigenvalues are sorted
/// descending (stable with respect to the diagonal order on ties) and each
/// eigenvector's first component with magnitude above 1e-12 is made positive.
/// Throws std::invalid_argument if A is not square or not symmetric within
/// 1e-10 * ||A||_F.
SymmetricEigen sym_eigen(const Matrix& a);

} // namespace pcade
