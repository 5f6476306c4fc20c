#pragma once

#include <cstddef>
#include <vector>

#include "agcd/poly.hpp"

namespace agcd {

/// Row-major dense complex matrix.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, cx fill = cx(0.0))
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<cx>& entries() const { return entries_; }

    cx& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cx& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    cx& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const cx& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    std::vector<cx> col(std::size_t j) const;
    std::vector<cx> row(std::size_t i) const;
    void set_col(std::size_t j, const std::vector<cx>& v);

    DenseMatrix transpose() const;
    double frobenius_norm() const;
    double max_abs() const;

    std::vector<cx> matvec(const std::vector<cx>& x) const;

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cx> entries_;
};

/// Result of a column-pivoted Householder QR factorization A*P = Q*R.
/// Q is kept in factored form; R is stored explicitly (min(m,n) x n, upper
/// trapezoidal); perm[k] is the original column index at position k.
struct PivotedQR {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<cx>> reflectors;  // Householder vectors, full length m
    DenseMatrix r;
    std::vector<std::size_t> perm;
    std::vector<double> diag_mags;  // |R[k][k]|

    /// Numerical rank: number of |R[k][k]| above tol * |R[0][0]|.
    std::size_t rank(double tol) const;
    /// Apply Q^H to a length-m vector.
    std::vector<cx> apply_qh(std::vector<cx> b) const;
    /// Apply Q to a length-m vector.
    std::vector<cx> apply_q(std::vector<cx> b) const;
};

PivotedQR qr_col_pivoted(const DenseMatrix& a);

/// Numerical rank via column-pivoted QR, threshold relative to the largest
/// diagonal magnitude of R.
std::size_t numerical_rank(const DenseMatrix& a, double tol);

/// Orthonormal-complement-free kernel basis: columns span the numerical null
/// space of A at the given relative threshold.  Returns a (cols x corank)
/// matrix; empty when A has full column rank.
DenseMatrix kernel_basis(const DenseMatrix& a, double tol);

/// Solve A x = b by Gaussian elimination with partial pivoting.
/// Throws SingularMatrixError when a pivot falls below working precision.
std::vector<cx> gepp_solve(DenseMatrix a, std::vector<cx> b);

/// Minimum-norm least-squares solution of A x = b via two orthogonal
/// triangularizations (column-pivoted QR of A, then QR of the leading block
/// of R^H).  Rank is truncated at rank_tol relative to the largest diagonal.
std::vector<cx> min_norm_least_squares(const DenseMatrix& a, const std::vector<cx>& b,
                                       double rank_tol = 1e-12);

}  // namespace agcd
