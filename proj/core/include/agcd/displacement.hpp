#pragma once

#include <cstddef>
#include <vector>

#include "agcd/dense_matrix.hpp"
#include "agcd/poly.hpp"

namespace agcd {

/// Low-rank factors of the Toeplitz-like displacement Z_m^1 A - A Z_n^theta,
/// where Z_n^theta is the n x n circulant with ones on the subdiagonal and
/// theta (unit modulus) in the top-right corner.
struct ToeplitzGenerators {
    std::size_t nrows = 0;
    std::size_t ncols = 0;
    std::size_t alpha = 0;
    DenseMatrix g;  // nrows x alpha
    DenseMatrix h;  // alpha x ncols
    cx theta{1.0};
};

/// Cauchy-like generators after the Fourier transformation: the represented
/// matrix C satisfies diag(d1) C - C diag(d2) = G H, i.e.
/// C[i][j] = (G[i,:] . H[:,j]) / (d1[i] - d2[j]).  All nodes are unit
/// modulus; eta = theta^(1/n) is the twist applied on the column side.
struct CauchyGenerators {
    std::vector<cx> d1;
    std::vector<cx> d2;
    DenseMatrix g;  // m x alpha
    DenseMatrix h;  // alpha x n
    cx theta{1.0};
    cx eta{1.0};

    std::size_t rows() const { return d1.size(); }
    std::size_t cols() const { return d2.size(); }
    std::size_t alpha() const { return g.cols(); }
};

/// The circulant Z_n^theta.
DenseMatrix circulant_shift(std::size_t n, cx theta);

/// Dense displacement Z^1 A - A Z^theta (test oracle).
DenseMatrix displaced(const DenseMatrix& a, cx theta);

/// Corner element for the column-side circulant that maximizes the minimum
/// distance between the row nodes (m-th roots of unity) and the column nodes
/// (n-th roots of theta).  Collisions occur when arg(theta) is a multiple of
/// 2*pi*gcd(m,n)/m; the midpoint pi*gcd(m,n)/m of the first collision-free
/// interval is returned.  Square case: theta = -1, interleaved roots.
cx default_theta(std::size_t nrows, std::size_t ncols);

/// Trim generator rank by rank-revealing orthogonal compression at the given
/// relative threshold.
ToeplitzGenerators compress_generators(ToeplitzGenerators tg, double tol = 1e-12);

/// Displacement generators (alpha <= 2) of the multiplication matrix of g
/// modulo f, assembled from the first and last column and the last row of
/// M_g via Barnett's formula; M_g itself is never formed.  Requires
/// deg f >= 2.
ToeplitzGenerators generators_of_mult_matrix(const Polynomial& f, const Polynomial& g, cx theta);

/// Displacement generators (alpha <= 3) of the Gauss-Newton Jacobian
/// J = [d(M_g v)/dg | d(M_g v)/dv]: d rows, m+k+1 columns, where column j of
/// the g-block holds x^j * v mod f and the v-block holds the first k columns
/// of M_g.  The column counts are taken from the raw coefficient vectors so
/// iterates with vanishing leading coefficients keep their shape.
ToeplitzGenerators generators_of_jacobian(const Polynomial& f, const std::vector<cx>& g_coeffs,
                                          const std::vector<cx>& v_coeffs, cx theta);
ToeplitzGenerators generators_of_jacobian(const Polynomial& f, const Polynomial& g,
                                          const Polynomial& v, cx theta);

/// Fourier transformation of Toeplitz-like generators into Cauchy-like ones,
/// using O((m+n) alpha log) transforms: the represented matrix becomes
/// F A D0^{-1} F^H with D0 = diag(eta^j).
CauchyGenerators toeplitz_to_cauchy(const ToeplitzGenerators& tg);

/// Dense oracle for the same transformation.
DenseMatrix dense_cauchy_transform(const DenseMatrix& a, cx theta);

/// Dense reconstruction of the Cauchy-like matrix from its generators.
DenseMatrix cauchy_reconstruct(const CauchyGenerators& cg);

/// Coordinate changes matching the transformation: a right-hand vector v
/// becomes w = F D0 v (so that A v = b iff C w = F b), and a left-hand
/// vector b becomes F b.  Round trips are identities.
std::vector<cx> to_cauchy_right(const CauchyGenerators& cg, std::vector<cx> v);
std::vector<cx> from_cauchy_right(const CauchyGenerators& cg, std::vector<cx> w);
std::vector<cx> to_cauchy_left(const CauchyGenerators& cg, std::vector<cx> b);
std::vector<cx> from_cauchy_left(const CauchyGenerators& cg, std::vector<cx> b);

}  // namespace agcd
