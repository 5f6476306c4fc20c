#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "agcd/errors.hpp"
#include "agcd/gko.hpp"
#include "agcd/poly.hpp"

namespace agcd {

struct AgcdConfig {
    /// Relative pivot threshold for rank estimation.  Raise it toward the
    /// expected perturbation size when the observed polynomial is noisy.
    double rank_tol = kDefaultRankTol;
    /// Absolute pivot threshold.  When set, the effective relative threshold
    /// becomes max(rank_tol, rank_tol_absolute / largest pivot).  Useful when
    /// the perturbation scale is known: noise pivots sit near the absolute
    /// perturbation size while the largest pivot varies over decades.
    std::optional<double> rank_tol_absolute;
    /// Stop when ||M_g v||_2 <= newton_tol * ||g||_2.
    double newton_tol = 1e-12;
    std::size_t max_iters = 50;
    /// Corner element of the column-side circulant; defaults to the maximin
    /// node-separation choice.
    std::optional<cx> theta;
    /// Fast structured solver for the Gauss-Newton step, with dense
    /// least-squares fallback on failure; false forces the dense path.
    bool use_structured_solver = true;
};

struct AgcdDiagnostics {
    /// Largest imaginary magnitude dropped from g_tilde for real inputs.
    double imag_drop = 0.0;
    /// The initial kernel vector was re-pivoted because of a vanishing
    /// leading coefficient.
    bool repivoted = false;
    /// The converged cofactor contained a factor not dividing f (the rank
    /// estimate undershot the corank); it was reduced to its divisor part
    /// and the degrees rebooked.
    bool cofactor_reduced = false;
    /// The structured step failed at least once and the dense path took over.
    bool used_dense_fallback = false;
    /// Linear-combination coefficients used by approximate_gcd_multi.
    std::vector<cx> combination;
};

struct AgcdResult {
    Polynomial g_tilde;   // perturbed polynomial
    Polynomial v_tilde;   // monic cofactor, degree k
    Polynomial gcd;       // common factor of f and g_tilde, degree d - k
    double residual = 0.0;   // ||M_{g_tilde} v_tilde||_2^2, recomputed at output
    double distance = 0.0;   // ||g - g_tilde||_2 against the observed g
    std::size_t iterations = 0;
    bool converged = false;
    RankReport rank_report;
    AgcdDiagnostics diagnostics;
};

/// Gauss-Newton diverged; carries the best iterate seen.
class DivergenceError : public Error {
  public:
    DivergenceError(const std::string& what, AgcdResult best)
        : Error(what), best_iterate(std::move(best)) {}
    AgcdResult best_iterate;
};

/// F(g, v) = ||M_g v||_2^2, the squared 2-norm of the coefficient vector of
/// g*v reduced modulo f.  Computed through columns of M_g (first column via
/// Barnett, successors by the companion recurrence).
double functional(const Polynomial& f, const Polynomial& g, const Polynomial& v);

/// Same value through plain polynomial multiplication and division; the
/// independent route used in consistency tests.
double functional_direct(const Polynomial& f, const Polynomial& g, const Polynomial& v);

/// Structured Gauss-Newton on F(g, v): iterates z <- z - y with
/// J(g, v) y = M_g v, touching only the free coordinates
/// [g_0..g_m, v_0..v_{k-1}].  v0 must be monic of degree k >= 1.
/// Returns the refined result (converged flag set accordingly); throws
/// DivergenceError after three consecutive residual increases.
AgcdResult gauss_newton_refine(const Polynomial& f, const Polynomial& g0, const Polynomial& v0,
                               const AgcdConfig& cfg = {});

/// Full pipeline: rank estimation on the Cauchy form of M_g, initial
/// cofactor from the approximate null space, Gauss-Newton refinement, gcd
/// extraction f / v_tilde.  corank 0 returns gcd = 1 without refinement.
AgcdResult approximate_gcd(const Polynomial& f, const Polynomial& g, const AgcdConfig& cfg = {});

/// Exact algebraic path: dense kernel of M_g, column echelon form, minimal
/// degree kernel polynomial s, gcd = f / s.  Assumes f squarefree (not
/// verified).  Returns 1 for an empty kernel.
Polynomial exact_gcd(const Polynomial& f, const Polynomial& g);

/// AGCD of f against several inexact polynomials: runs approximate_gcd on a
/// random (seeded, unit-disc) linear combination of gs and records the
/// combination coefficients in the diagnostics.
AgcdResult approximate_gcd_multi(const Polynomial& f, const std::vector<Polynomial>& gs,
                                 const AgcdConfig& cfg, std::uint64_t seed);

/// Minimal-degree member of the column span of a kernel-basis matrix
/// (columns hold polynomial coefficient vectors), via column echelon
/// reduction pivoting from the highest row down.
std::vector<cx> minimal_degree_kernel_vector(const DenseMatrix& kernel, double tol = 1e-10);

}  // namespace agcd
