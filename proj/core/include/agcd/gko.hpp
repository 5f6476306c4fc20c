#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "agcd/dense_matrix.hpp"
#include "agcd/displacement.hpp"

namespace agcd {

enum class Pivoting { kPartial, kGu };

/// Nodes closer than this are treated as colliding.
inline constexpr double kNodeSeparationFloor = 1e-12;

/// Default relative pivot threshold for rank estimation.  Sits between
/// machine precision and the perturbation sizes typical of approximate
/// instances; override per call when the expected perturbation is known.
inline constexpr double kDefaultRankTol = 1e-8;

/// Pivoted LU factorization of a Cauchy-like matrix computed on generators:
/// the permuted matrix satisfies C[p1[a]][p2[b]] = sum_t L[a][t] U[t][b].
struct StructuredLU {
    std::vector<std::size_t> p1;  // p1[k] = original row index at position k
    std::vector<std::size_t> p2;  // p2[k] = original column index at position k
    DenseMatrix l;                // m x r, unit lower triangular
    DenseMatrix u;                // r x n, upper trapezoidal
    std::vector<double> pivots;   // |U[k][k]| in elimination order

    std::size_t rows() const { return l.rows(); }
    std::size_t cols() const { return u.cols(); }
    std::size_t steps() const { return u.rows(); }
};

struct RankReport {
    std::size_t numerical_rank = 0;
    std::size_t corank = 0;
    std::vector<double> pivot_magnitudes;      // sorted, nonincreasing
    std::optional<std::size_t> gap_location;   // rank suggested by the largest log gap
    double threshold_used = 0.0;
    std::vector<double> row_norms;             // 2-norms of the rows of U (diagnostics)
};

/// GKO: Gaussian elimination with row pivoting performed on the generators,
/// one reconstructed column at a time, O(alpha*m*n).  kGu adds a cheap
/// column selection by right-generator norm and re-orthonormalizes the left
/// generator when its rows grow more than 1e6 beyond their initial maximum.
/// Throws NodeCollisionError when |d1[i] - d2[j]| falls below the floor.
StructuredLU gko_lu(const CauchyGenerators& cg, Pivoting pivoting = Pivoting::kGu);

/// Numerical rank = number of pivots above tol times the largest pivot.
RankReport estimate_rank(const StructuredLU& lu, double tol = kDefaultRankTol);

/// Solve the square nonsingular system C x = b through the factors.
/// Throws SingularMatrixError (with rank information) on a negligible pivot.
std::vector<cx> lu_solve(const StructuredLU& lu, const std::vector<cx>& rhs);

/// Basic solution of an underdetermined system (rows <= cols): back-solve
/// the leading steps x steps block and zero the free coordinates.  This is
/// a solution of C x = b but not, in general, the least-norm one.
/// Throws SingularMatrixError when the leading block collapses.
std::vector<cx> lu_solve_basic(const StructuredLU& lu, const std::vector<cx>& rhs);

/// Approximate null-space basis at the given rank: count = n - rank columns
/// w with C w ~= 0, each obtained by back-solving the leading rank x rank
/// block of U against one trailing column.  Coordinates are those of the
/// Cauchy-like matrix.
DenseMatrix null_space_basis(const StructuredLU& lu, std::size_t rank);

/// A single vector in the approximate null space of the Cauchy-like matrix
/// (the first basis column).  Factorizes internally with Gu-style pivoting.
/// Throws InvalidInputError when rank >= n.
std::vector<cx> null_vector(const CauchyGenerators& cg, std::size_t rank);

}  // namespace agcd
