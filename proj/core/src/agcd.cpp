#include "agcd/agcd.hpp"

#include <algorithm>
#include <cmath>

#include "agcd/bezout.hpp"
#include "agcd/displacement.hpp"
#include "agcd/errors.hpp"
#include "agcd/rng.hpp"
#include "agcd/testkit.hpp"

namespace agcd {

namespace {

double norm2(const std::vector<cx>& v) {
    double s = 0.0;
    for (const cx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

// M_g columns 0..k accumulated against v: first column via Barnett-style
// reduction, successors by the companion recurrence.
std::vector<cx> residual_structured(const Polynomial& fm, const std::vector<cx>& g_coeffs,
                                    const std::vector<cx>& v_coeffs) {
    const int d = fm.degree();
    std::vector<cx> col = reduce_mod(fm, g_coeffs);
    std::vector<cx> r(d, cx(0.0));
    const std::size_t k = v_coeffs.size() - 1;
    for (std::size_t j = 0; j <= k; ++j) {
        const cx vj = v_coeffs[j];
        if (vj != cx(0.0))
            for (int i = 0; i < d; ++i) r[i] += vj * col[i];
        if (j < k) companion_step(fm, col);
    }
    return r;
}

struct Iterate {
    std::vector<cx> g;
    std::vector<cx> v;
    double rnorm = 0.0;
    std::size_t iteration = 0;
};

AgcdResult assemble_result(const Polynomial& fm, const Polynomial& g_observed, const Iterate& it,
                           bool converged, bool inputs_real, AgcdDiagnostics diag) {
    AgcdResult res;
    res.iterations = it.iteration;
    res.converged = converged;
    res.diagnostics = std::move(diag);

    std::vector<cx> gfinal = it.g;
    if (inputs_real) {
        double drop = 0.0;
        for (cx& c : gfinal) {
            drop = std::max(drop, std::abs(c.imag()));
            c = cx(c.real());
        }
        res.diagnostics.imag_drop = drop;
    }
    res.g_tilde = Polynomial(std::move(gfinal));
    res.v_tilde = Polynomial(std::vector<cx>(it.v));

    auto [q, rem] = divmod(fm, res.v_tilde);
    if (converged && rem.norm() > 1e-8 * fm.norm() && res.v_tilde.degree() >= 1) {
        // The iteration landed on a zero with more common structure than the
        // rank estimate asked for: v then contains a factor foreign to f and
        // f/v is meaningless.  Keep the divisor part of v.
        const Polynomial t = testkit::euclid_gcd(fm, res.v_tilde, 1e-7);
        if (t.degree() >= 1 && t.degree() < res.v_tilde.degree()) {
            const auto [q2, rem2] = divmod(fm, t);
            if (rem2.norm() <= 1e-8 * fm.norm()) {
                res.v_tilde = t;
                q = q2;
                rem = rem2;
                res.diagnostics.cofactor_reduced = true;
            }
        }
    }
    if (converged && rem.norm() > 1e-8 * fm.norm()) converged = false;
    res.converged = converged;
    res.gcd = q;

    const std::vector<cx> final_res =
        testkit::residual_direct(fm, res.g_tilde.coeffs().empty() ? std::vector<cx>{cx(0.0)}
                                                                  : res.g_tilde.coeffs(),
                                 res.v_tilde.coeffs());
    const double rn = norm2(final_res);
    res.residual = rn * rn;
    res.distance = distance(g_observed, res.g_tilde);

    res.rank_report.numerical_rank = static_cast<std::size_t>(res.v_tilde.degree());
    res.rank_report.corank = static_cast<std::size_t>(fm.degree() - res.v_tilde.degree());
    return res;
}

}  // namespace

double functional(const Polynomial& f, const Polynomial& g, const Polynomial& v) {
    const Polynomial fm = monic(f);
    if (v.degree() >= fm.degree())
        throw InvalidInputError("functional: deg v must be below deg f");
    if (v.is_zero()) return 0.0;
    std::vector<cx> gc = g.coeffs();
    if (gc.empty()) gc.push_back(cx(0.0));
    const double n = norm2(residual_structured(fm, gc, v.coeffs()));
    return n * n;
}

double functional_direct(const Polynomial& f, const Polynomial& g, const Polynomial& v) {
    const Polynomial fm = monic(f);
    if (v.is_zero() || g.is_zero()) return 0.0;
    const Polynomial r = divmod(mul(g, v), fm).second;
    const double n = r.norm();
    return n * n;
}

AgcdResult gauss_newton_refine(const Polynomial& f, const Polynomial& g0, const Polynomial& v0,
                               const AgcdConfig& cfg) {
    if (f.degree() < 1) throw InvalidInputError("gauss_newton_refine: deg f must be >= 1");
    if (g0.is_zero()) throw InvalidInputError("gauss_newton_refine: g must be nonzero");
    if (v0.degree() < 1) throw InvalidInputError("gauss_newton_refine: deg v must be >= 1");
    if (v0.degree() >= f.degree())
        throw InvalidInputError("gauss_newton_refine: deg v must be below deg f");

    const Polynomial fm = monic(f);
    const int d = fm.degree();
    const bool inputs_real = fm.is_real() && g0.is_real() && v0.is_real();

    Iterate cur;
    cur.g = g0.coeffs();
    cur.v = monic(v0).coeffs();
    cur.v.back() = cx(1.0);  // exact leading one; never touched by updates
    const std::size_t m = cur.g.size() - 1;
    const std::size_t k = cur.v.size() - 1;
    const std::size_t w = m + k + 1;
    const cx theta = cfg.theta.value_or(default_theta(d, w));

    AgcdDiagnostics diag;
    cur.rnorm = norm2(residual_structured(fm, cur.g, cur.v));

    Iterate best = cur;
    std::size_t consecutive_increases = 0;
    bool converged = false;

    for (;;) {
        if (cur.rnorm <= cfg.newton_tol * norm2(cur.g)) {
            converged = true;
            break;
        }
        if (cur.iteration >= cfg.max_iters) break;

        const std::vector<cx> r = residual_structured(fm, cur.g, cur.v);
        std::vector<cx> step;
        bool structured_done = false;
        if (cfg.use_structured_solver) {
            try {
                const ToeplitzGenerators tg = generators_of_jacobian(fm, cur.g, cur.v, theta);
                const CauchyGenerators cg = toeplitz_to_cauchy(tg);
                const StructuredLU lu = gko_lu(cg, Pivoting::kGu);
                const std::vector<cx> rhat = to_cauchy_left(cg, r);
                const std::vector<cx> yhat = lu_solve_basic(lu, rhat);
                step = from_cauchy_right(cg, yhat);
                structured_done = true;
            } catch (const SingularMatrixError&) {
                diag.used_dense_fallback = true;
            } catch (const NodeCollisionError&) {
                diag.used_dense_fallback = true;
            }
        }
        if (!structured_done) {
            const DenseMatrix j = testkit::dense_jacobian(fm, cur.g, cur.v);
            step = min_norm_least_squares(j, r);
        }
        // For a real problem the Jacobian and residual are real, so the real
        // part of any solution of J y = r solves it too; taking it keeps the
        // iterates exactly real (the Fourier-domain basic solution would
        // otherwise pick up step-sized imaginary parts).
        if (inputs_real)
            for (cx& y : step) y = cx(y.real());

        Iterate next = cur;
        next.iteration = cur.iteration + 1;
        for (std::size_t t = 0; t <= m; ++t) next.g[t] -= step[t];
        for (std::size_t t = 0; t < k; ++t) next.v[t] -= step[m + 1 + t];
        next.rnorm = norm2(residual_structured(fm, next.g, next.v));

        if (next.rnorm > cur.rnorm) {
            if (++consecutive_increases >= 3)
                throw DivergenceError(
                    "gauss_newton_refine: residual grew for 3 consecutive steps",
                    assemble_result(fm, g0, best, false, inputs_real, diag));
        } else {
            consecutive_increases = 0;
        }
        if (next.rnorm < best.rnorm) best = next;
        cur = std::move(next);
    }

    const Iterate& out = converged ? cur : best;
    return assemble_result(fm, g0, out, converged, inputs_real, std::move(diag));
}

namespace {

struct EchelonColumn {
    std::vector<cx> coeffs;  // truncated at the pivot row, pivot entry = 1
    int degree = -1;
    double pivot_rel = 0.0;  // pivot magnitude relative to the column norm
};

// Column echelon reduction pivoting from the highest row down; returns the
// assigned columns sorted by ascending degree.
std::vector<EchelonColumn> echelon_reduce(const DenseMatrix& kernel, double tol) {
    const std::size_t d = kernel.rows(), c = kernel.cols();
    std::vector<std::vector<cx>> cols(c);
    for (std::size_t t = 0; t < c; ++t) {
        cols[t] = kernel.col(t);
        const double n = norm2(cols[t]);
        if (n > 0.0)
            for (cx& v : cols[t]) v /= n;
    }
    std::vector<int> pivot_row(c, -1);
    std::vector<double> pivot_rel(c, 0.0);

    for (std::size_t rr = d; rr-- > 0;) {
        std::size_t best = c;
        double best_mag = tol;
        for (std::size_t t = 0; t < c; ++t) {
            if (pivot_row[t] >= 0) continue;
            const double mag = std::abs(cols[t][rr]);
            if (mag > best_mag) {
                best_mag = mag;
                best = t;
            }
        }
        if (best == c) continue;
        pivot_row[best] = static_cast<int>(rr);
        const double colnorm = norm2(cols[best]);
        pivot_rel[best] = colnorm > 0.0 ? best_mag / colnorm : 0.0;
        const cx piv = cols[best][rr];
        for (cx& v : cols[best]) v /= piv;
        for (std::size_t t = 0; t < c; ++t) {
            if (t == best || pivot_row[t] >= 0) continue;
            const cx factor = cols[t][rr];
            if (factor == cx(0.0)) continue;
            for (std::size_t i = 0; i < d; ++i) cols[t][i] -= factor * cols[best][i];
        }
    }

    std::vector<EchelonColumn> out;
    for (std::size_t t = 0; t < c; ++t) {
        if (pivot_row[t] < 0) continue;
        EchelonColumn ec;
        ec.degree = pivot_row[t];
        ec.pivot_rel = pivot_rel[t];
        ec.coeffs = cols[t];
        ec.coeffs.resize(static_cast<std::size_t>(pivot_row[t]) + 1);
        out.push_back(std::move(ec));
    }
    std::sort(out.begin(), out.end(),
              [](const EchelonColumn& a, const EchelonColumn& b) { return a.degree < b.degree; });
    return out;
}

}  // namespace

std::vector<cx> minimal_degree_kernel_vector(const DenseMatrix& kernel, double tol) {
    const std::vector<EchelonColumn> cols = echelon_reduce(kernel, tol);
    if (cols.empty()) return {};
    return cols.front().coeffs;
}

AgcdResult approximate_gcd(const Polynomial& f, const Polynomial& g, const AgcdConfig& cfg) {
    if (f.degree() < 1) throw InvalidInputError("approximate_gcd: deg f must be >= 1");
    if (g.is_zero()) throw InvalidInputError("approximate_gcd: g must be nonzero");
    const Polynomial fm = monic(f);
    const int d = fm.degree();
    const bool inputs_real = fm.is_real() && g.is_real();

    // Degree-one modulus: M_g is the 1x1 matrix [g mod f].
    if (d == 1) {
        const cx val = eval(g, -fm.coeff(0));
        RankReport rep;
        rep.pivot_magnitudes = {std::abs(val)};
        rep.threshold_used = cfg.rank_tol * std::max(1.0, g.norm());
        rep.row_norms = rep.pivot_magnitudes;
        const bool common = std::abs(val) <= rep.threshold_used;
        rep.numerical_rank = common ? 0 : 1;
        rep.corank = 1 - rep.numerical_rank;
        Iterate it;
        it.g = g.coeffs();
        it.v = common ? std::vector<cx>{cx(1.0)} : fm.coeffs();
        AgcdResult res = assemble_result(fm, g, it, true, inputs_real, {});
        res.rank_report = rep;
        return res;
    }

    const cx theta = cfg.theta.value_or(default_theta(d, d));
    const ToeplitzGenerators tg = generators_of_mult_matrix(fm, g, theta);
    const CauchyGenerators cg = toeplitz_to_cauchy(tg);
    const StructuredLU lu = gko_lu(cg, Pivoting::kGu);
    double tol = cfg.rank_tol;
    if (cfg.rank_tol_absolute) {
        const double top = *std::max_element(lu.pivots.begin(), lu.pivots.end());
        if (top > 0.0) tol = std::max(tol, *cfg.rank_tol_absolute / top);
    }
    RankReport report = estimate_rank(lu, tol);
    const std::size_t k = report.numerical_rank;

    if (report.corank == 0) {
        // No nontrivial common factor at this tolerance: gcd = 1, v = f.
        Iterate it;
        it.g = g.coeffs();
        it.v = fm.coeffs();
        AgcdResult res = assemble_result(fm, g, it, true, inputs_real, {});
        res.rank_report = std::move(report);
        return res;
    }
    if (k == 0) {
        // g vanishes modulo f: the whole of f is a common factor.
        Iterate it;
        it.g = g.coeffs();
        it.v = {cx(1.0)};
        AgcdResult res = assemble_result(fm, g, it, true, inputs_real, {});
        res.rank_report = std::move(report);
        return res;
    }

    // Approximate kernel of M_g, mapped back from Cauchy coordinates.
    const DenseMatrix basis_hat = null_space_basis(lu, k);
    DenseMatrix kernel(d, basis_hat.cols());
    for (std::size_t t = 0; t < basis_hat.cols(); ++t)
        kernel.set_col(t, from_cauchy_right(cg, basis_hat.col(t)));

    AgcdDiagnostics diag;
    const std::vector<EchelonColumn> candidates = echelon_reduce(kernel, 1e-10);
    if (candidates.empty())
        throw SingularMatrixError("approximate_gcd: kernel extraction produced no usable vector",
                                  k, report.corank);
    // Re-pivot to the next kernel vector when the minimal-degree one has a
    // negligible leading coefficient.
    std::size_t pick = 0;
    while (pick < candidates.size() && candidates[pick].pivot_rel < 1e-8) ++pick;
    if (pick == candidates.size()) pick = 0;
    if (pick != 0) diag.repivoted = true;
    std::vector<cx> v0ic = candidates[pick].coeffs;
    if (inputs_real) {
        // The kernel of a real matrix has a real basis; the imaginary parts
        // here are Fourier round-trip dust.
        for (cx& c : v0ic) c = cx(c.real());
    }
    Polynomial v0p = monic(Polynomial(std::move(v0ic)));
    std::size_t k_used = static_cast<std::size_t>(v0p.degree());
    if (k_used != k) {
        report.numerical_rank = k_used;
        report.corank = d - k_used;
        diag.repivoted = true;
    }
    if (k_used == 0) {
        Iterate it;
        it.g = g.coeffs();
        it.v = {cx(1.0)};
        AgcdResult res = assemble_result(fm, g, it, true, inputs_real, diag);
        res.rank_report = std::move(report);
        return res;
    }

    AgcdResult res = gauss_newton_refine(fm, g, v0p, cfg);
    res.diagnostics.repivoted = diag.repivoted;
    const std::size_t k_final = static_cast<std::size_t>(res.v_tilde.degree());
    if (k_final != report.numerical_rank) {
        report.numerical_rank = k_final;
        report.corank = static_cast<std::size_t>(d) - k_final;
    }
    res.rank_report = std::move(report);
    return res;
}

Polynomial exact_gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) throw InvalidInputError("exact_gcd: f must be nonzero");
    const Polynomial fm = monic(f);
    if (fm.degree() < 1) return Polynomial{cx(1.0)};

    const DenseMatrix m = barnett_mult_matrix(fm, g);
    const DenseMatrix kernel = kernel_basis(m, kDefaultRankTol);
    if (kernel.cols() == 0) return Polynomial{cx(1.0)};

    const std::vector<cx> svec = minimal_degree_kernel_vector(kernel);
    if (svec.empty()) return Polynomial{cx(1.0)};
    const Polynomial s = monic(Polynomial(std::vector<cx>(svec)));
    if (s.degree() == 0) return fm;
    return monic(divmod(fm, s).first);
}

AgcdResult approximate_gcd_multi(const Polynomial& f, const std::vector<Polynomial>& gs,
                                 const AgcdConfig& cfg, std::uint64_t seed) {
    if (gs.empty()) throw InvalidInputError("approximate_gcd_multi: empty polynomial list");
    Rng rng(seed);
    std::vector<cx> coeffs(gs.size());
    Polynomial combined;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        coeffs[i] = rng.unit_disc();
        combined = add(combined, scale(gs[i], coeffs[i]));
    }
    AgcdResult res = approximate_gcd(f, combined, cfg);
    res.diagnostics.combination = std::move(coeffs);
    return res;
}

}  // namespace agcd
