#pragma once

#include <cstddef>
#include <vector>

namespace arcstab {

// Dense row-major matrix of doubles. Small and unclever on purpose: the
// matrices in this library are K x K or d x d with K, d <= a few dozen.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

// Repeated squaring; exponent 0 gives the identity.
Matrix mat_pow(const Matrix& m, unsigned long long exponent);

// Cholesky factorization A = L L^T of a symmetric positive definite matrix.
// Returns false (leaving `lower` untouched on failure) if a non-positive
// pivot shows up, i.e. A is not positive definite to working precision.
bool cholesky(const Matrix& a, Matrix& lower);

// Solve L y = b in place given lower-triangular L.
void forward_substitute(const Matrix& lower, std::vector<double>& b);

struct EigenDecomposition {
    std::vector<double> values;  // descending
    Matrix vectors;              // column j pairs with values[j]
};

// Cyclic Jacobi rotations for a symmetric matrix. Sweeps until the
// off-diagonal Frobenius norm drops below 1e-12 (or 100 sweeps).
EigenDecomposition jacobi_eigen(const Matrix& sym);

}  // namespace arcstab
