#pragma once

#include <vector>

#include "agcd/dense_matrix.hpp"
#include "agcd/poly.hpp"

namespace agcd {

/// Bezout matrix of f and g: the symmetric n x n matrix (n = max degree) of
/// the bivariate form (f(x)g(y) - f(y)g(x)) / (x - y), entry (i,j) holding
/// the coefficient of x^i y^j.  Computed by the divided-difference recurrence
///   theta[i][j] = theta[i+1][j-1] + f[i+1]*g[j] - f[j]*g[i+1]
/// in O(n^2).  Throws if both inputs are zero.
DenseMatrix bezout_matrix(const Polynomial& f, const Polynomial& g);

/// Bezout matrix of 1 and f: triangular Hankel, entry (i,j) = -f[i+j+1] when
/// i+j < deg f and zero otherwise.  Requires deg f >= 1.
DenseMatrix hankel_bezout(const Polynomial& f);

/// Solve hankel_bezout(f) * w = rhs in O(d^2) by back-substitution along the
/// antidiagonals.  f must have degree >= 1; rhs length deg f.
std::vector<cx> hankel_bezout_solve(const Polynomial& f, const std::vector<cx>& rhs);

/// Multiplication matrix of g in the quotient ring modulo f (f monic or
/// normalized internally, d = deg f >= 1): the d x d matrix whose column j
/// holds the coefficients of x^j * g reduced modulo f.  Assembled column by
/// column from Bezout matrix-vector products and Hankel triangular solves,
/// with no Euclidean division.
DenseMatrix barnett_mult_matrix(const Polynomial& f, const Polynomial& g);

/// Column j of barnett_mult_matrix(f, g) without forming the whole matrix:
/// one Hankel triangular solve plus one matrix-vector product.
std::vector<cx> mult_matrix_column(const Polynomial& f, const Polynomial& g, std::size_t j);

/// Row j of barnett_mult_matrix(f, g), using the symmetry of the Bezoutian.
std::vector<cx> mult_matrix_row(const Polynomial& f, const Polynomial& g, std::size_t j);

/// Frobenius companion matrix of f (deg f >= 1): subdiagonal ones, last
/// column -f[i]/f[d].
DenseMatrix frobenius(const Polynomial& f);

/// Coefficients of p reduced modulo f (monic normalization applied
/// internally), computed by repeated multiply-by-x-mod-f steps instead of
/// Euclidean division.  Returns a length-d vector, d = deg f.
std::vector<cx> reduce_mod(const Polynomial& f, const Polynomial& p);
/// Same on a raw coefficient vector, with no canonicalization.
std::vector<cx> reduce_mod(const Polynomial& f, const std::vector<cx>& p_coeffs);

/// One multiply-by-x-mod-f step on a length-d coefficient vector, i.e. the
/// action of the companion matrix.  fmonic must be monic of degree d.
void companion_step(const Polynomial& fmonic, std::vector<cx>& v);

}  // namespace agcd
