#pragma once

#include <cstdint>
#include <vector>

#include "agcd/dense_matrix.hpp"
#include "agcd/poly.hpp"
#include "agcd/rng.hpp"

namespace agcd::testkit {

/// Synthetic pair with an exact common factor of prescribed degree, the
/// observed polynomial carrying entrywise uniform noise in [-eta, eta].
struct PlantedInstance {
    Polynomial f;                // monic, degree n
    Polynomial g_exact;          // monic, degree m
    Polynomial g_observed;       // g_exact + perturbation (not re-normalized)
    Polynomial gcd_exact;        // the planted factor h, degree gcd_degree
    Polynomial cofactor_exact;   // f / h, monic
    std::size_t gcd_degree = 0;
    double eta = 0.0;
    std::uint64_t seed = 0;
};

/// Random monic polynomial of the given degree with real coefficients
/// uniform in [-1, 1].
Polynomial random_monic(Rng& rng, std::size_t degree);

/// f = c*h, g = w*h with random monic factors; the perturbation hits all
/// m+1 coefficients of g including the leading one.  Deterministic per seed.
PlantedInstance plant_instance(std::size_t n, std::size_t m, std::size_t gcd_degree, double eta,
                               std::uint64_t seed);

/// Multiplication matrix built the slow, obvious way: column j holds the
/// coefficients of x^j * g reduced modulo f by Euclidean division.
DenseMatrix brute_force_mult_matrix(const Polynomial& f, const Polynomial& g);

/// O(n^3) Gaussian elimination with partial pivoting.
std::vector<cx> dense_gepp_solve(const DenseMatrix& a, const std::vector<cx>& b);

/// Minimum-norm least-squares solution via orthogonal triangularization.
std::vector<cx> dense_least_squares(const DenseMatrix& a, const std::vector<cx>& b);

/// Classical Euclidean remainder sequence with coefficient trimming at tol;
/// returns the monic gcd.
Polynomial euclid_gcd(const Polynomial& f, const Polynomial& g, double tol);

/// The residual vector g*v mod f computed by plain multiplication and
/// division, on raw coefficient vectors (no canonicalization).
std::vector<cx> residual_direct(const Polynomial& fmonic, const std::vector<cx>& g_coeffs,
                                const std::vector<cx>& v_coeffs);

/// Dense Gauss-Newton Jacobian [d(M_g v)/dg | d(M_g v)/dv], built column by
/// column from Euclidean divisions; the reference for the structured
/// generators.
DenseMatrix dense_jacobian(const Polynomial& fmonic, const std::vector<cx>& g_coeffs,
                           const std::vector<cx>& v_coeffs);

/// Central finite differences of the residual map in each of the m+k+1 free
/// coordinates.
DenseMatrix finite_difference_jacobian(const Polynomial& f, const Polynomial& g,
                                       const Polynomial& v, double step);

}  // namespace agcd::testkit
