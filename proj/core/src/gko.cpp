#include "agcd/gko.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "agcd/errors.hpp"

namespace agcd {

namespace {

constexpr double kGrowthLimit = 1e6;

double row_norm(const DenseMatrix& m, std::size_t i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::norm(m.at(i, j));
    return std::sqrt(s);
}

// Thin modified Gram-Schmidt QR of rows from..m-1 of g (as a block of column
// vectors); the triangular factor is absorbed into the live columns of h.
void reorthonormalize(DenseMatrix& g, DenseMatrix& h, std::size_t from, std::size_t hfrom) {
    const std::size_t m = g.rows(), a = g.cols();
    if (from >= m || a == 0) return;

    std::vector<std::vector<cx>> q(a, std::vector<cx>(m - from, cx(0.0)));
    DenseMatrix r(a, a);
    for (std::size_t c = 0; c < a; ++c) {
        for (std::size_t i = from; i < m; ++i) q[c][i - from] = g.at(i, c);
        for (std::size_t p = 0; p < c; ++p) {
            cx dot(0.0);
            for (std::size_t i = 0; i < q[c].size(); ++i) dot += std::conj(q[p][i]) * q[c][i];
            r.at(p, c) = dot;
            for (std::size_t i = 0; i < q[c].size(); ++i) q[c][i] -= dot * q[p][i];
        }
        double nrm = 0.0;
        for (const cx& v : q[c]) nrm += std::norm(v);
        nrm = std::sqrt(nrm);
        r.at(c, c) = nrm;
        if (nrm > 0.0)
            for (cx& v : q[c]) v /= nrm;
    }
    for (std::size_t c = 0; c < a; ++c)
        for (std::size_t i = from; i < m; ++i) g.at(i, c) = q[c][i - from];
    // h_live = R * h_live; R upper triangular, rows computed top-down.
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = hfrom; j < h.cols(); ++j) {
            cx acc(0.0);
            for (std::size_t t = i; t < a; ++t) acc += r.at(i, t) * h.at(t, j);
            h.at(i, j) = acc;
        }
}

}  // namespace

StructuredLU gko_lu(const CauchyGenerators& cg, Pivoting pivoting) {
    const std::size_t m = cg.rows(), n = cg.cols(), a = cg.alpha();
    const std::size_t r = std::min(m, n);

    DenseMatrix gw = cg.g;
    DenseMatrix hw = cg.h;
    std::vector<cx> d1 = cg.d1;
    std::vector<cx> d2 = cg.d2;

    StructuredLU lu;
    lu.p1.resize(m);
    lu.p2.resize(n);
    for (std::size_t i = 0; i < m; ++i) lu.p1[i] = i;
    for (std::size_t j = 0; j < n; ++j) lu.p2[j] = j;
    lu.l = DenseMatrix(m, r);
    lu.u = DenseMatrix(r, n);
    lu.pivots.assign(r, 0.0);

    double initial_growth_cap = 0.0;
    if (pivoting == Pivoting::kGu) {
        for (std::size_t i = 0; i < m; ++i)
            initial_growth_cap = std::max(initial_growth_cap, row_norm(gw, i));
        initial_growth_cap *= kGrowthLimit;
    }

    std::vector<cx> col(m);
    for (std::size_t k = 0; k < r; ++k) {
        if (pivoting == Pivoting::kGu) {
            // Gu-style column selection: probe the row with the largest left
            // generator norm and take the column where that row of the Schur
            // complement (denominators included) is largest.
            std::size_t probe = k;
            double probe_norm = -1.0;
            for (std::size_t i = k; i < m; ++i) {
                const double s = row_norm(gw, i);
                if (s > probe_norm) {
                    probe_norm = s;
                    probe = i;
                }
            }
            std::size_t best = k;
            double best_mag = -1.0;
            for (std::size_t j = k; j < n; ++j) {
                cx num(0.0);
                for (std::size_t t = 0; t < a; ++t) num += gw.at(probe, t) * hw.at(t, j);
                const double denom = std::abs(d1[probe] - d2[j]);
                const double mag = denom >= kNodeSeparationFloor ? std::abs(num) / denom : 0.0;
                if (mag > best_mag) {
                    best_mag = mag;
                    best = j;
                }
            }
            if (best != k) {
                for (std::size_t t = 0; t < a; ++t) std::swap(hw.at(t, k), hw.at(t, best));
                std::swap(d2[k], d2[best]);
                std::swap(lu.p2[k], lu.p2[best]);
                for (std::size_t t = 0; t < k; ++t) std::swap(lu.u.at(t, k), lu.u.at(t, best));
            }
        }

        // Reconstruct column k of the Schur complement.
        for (std::size_t i = k; i < m; ++i) {
            const cx denom = d1[i] - d2[k];
            if (std::abs(denom) < kNodeSeparationFloor)
                throw NodeCollisionError("gko_lu: node collision between row node " +
                                             std::to_string(lu.p1[i]) + " and column node " +
                                             std::to_string(lu.p2[k]),
                                         lu.p1[i], lu.p2[k]);
            cx num(0.0);
            for (std::size_t t = 0; t < a; ++t) num += gw.at(i, t) * hw.at(t, k);
            col[i] = num / denom;
        }

        // Partial row pivoting.
        std::size_t piv = k;
        double piv_mag = std::abs(col[k]);
        for (std::size_t i = k + 1; i < m; ++i) {
            const double mag = std::abs(col[i]);
            if (mag > piv_mag) {
                piv_mag = mag;
                piv = i;
            }
        }
        if (piv != k) {
            for (std::size_t t = 0; t < a; ++t) std::swap(gw.at(k, t), gw.at(piv, t));
            std::swap(d1[k], d1[piv]);
            std::swap(lu.p1[k], lu.p1[piv]);
            std::swap(col[k], col[piv]);
            for (std::size_t t = 0; t < k; ++t) std::swap(lu.l.at(k, t), lu.l.at(piv, t));
        }

        const cx pivval = col[k];
        lu.pivots[k] = piv_mag;
        lu.l.at(k, k) = cx(1.0);
        lu.u.at(k, k) = pivval;

        // Row k of the Schur complement.
        for (std::size_t j = k + 1; j < n; ++j) {
            const cx denom = d1[k] - d2[j];
            if (std::abs(denom) < kNodeSeparationFloor)
                throw NodeCollisionError("gko_lu: node collision between row node " +
                                             std::to_string(lu.p1[k]) + " and column node " +
                                             std::to_string(lu.p2[j]),
                                         lu.p1[k], lu.p2[j]);
            cx num(0.0);
            for (std::size_t t = 0; t < a; ++t) num += gw.at(k, t) * hw.at(t, j);
            lu.u.at(k, j) = num / denom;
        }

        // Eliminate and propagate the Schur complement onto the generators.
        // A vanishing pivot means the whole remaining column is ~zero, so the
        // trailing generators already represent the Schur complement.
        if (piv_mag > 0.0 && std::isnormal(piv_mag)) {
            for (std::size_t i = k + 1; i < m; ++i) {
                const cx li = col[i] / pivval;
                lu.l.at(i, k) = li;
                if (li == cx(0.0)) continue;
                for (std::size_t t = 0; t < a; ++t) gw.at(i, t) -= li * gw.at(k, t);
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                const cx ratio = lu.u.at(k, j) / pivval;
                if (ratio == cx(0.0)) continue;
                for (std::size_t t = 0; t < a; ++t) hw.at(t, j) -= hw.at(t, k) * ratio;
            }
        }

        if (pivoting == Pivoting::kGu && k + 1 < r) {
            double max_row = 0.0;
            for (std::size_t i = k + 1; i < m; ++i) max_row = std::max(max_row, row_norm(gw, i));
            if (max_row > initial_growth_cap) reorthonormalize(gw, hw, k + 1, k + 1);
        }
    }
    return lu;
}

RankReport estimate_rank(const StructuredLU& lu, double tol) {
    RankReport rep;
    rep.pivot_magnitudes = lu.pivots;
    std::sort(rep.pivot_magnitudes.begin(), rep.pivot_magnitudes.end(), std::greater<double>());
    const double top = rep.pivot_magnitudes.empty() ? 0.0 : rep.pivot_magnitudes.front();
    rep.threshold_used = tol * top;
    for (double p : lu.pivots)
        if (p > rep.threshold_used && top > 0.0) ++rep.numerical_rank;
    rep.corank = lu.steps() - rep.numerical_rank;

    // Largest log-magnitude drop between consecutive sorted pivots.
    double best_gap = 0.0;
    for (std::size_t i = 0; i + 1 < rep.pivot_magnitudes.size(); ++i) {
        const double hi = rep.pivot_magnitudes[i];
        const double lo = rep.pivot_magnitudes[i + 1];
        if (hi <= 0.0) break;
        const double gap = (lo > 0.0) ? std::log10(hi / lo) : std::numeric_limits<double>::infinity();
        if (gap > best_gap) {
            best_gap = gap;
            rep.gap_location = i + 1;
        }
        if (lo <= 0.0) break;
    }

    rep.row_norms.resize(lu.steps());
    for (std::size_t i = 0; i < lu.steps(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < lu.cols(); ++j) s += std::norm(lu.u.at(i, j));
        rep.row_norms[i] = std::sqrt(s);
    }
    return rep;
}

namespace {

// Forward substitution L y = b[p1].
std::vector<cx> forward_sub(const StructuredLU& lu, const std::vector<cx>& rhs) {
    const std::size_t r = lu.steps();
    std::vector<cx> y(r);
    for (std::size_t i = 0; i < r; ++i) {
        cx acc = rhs[lu.p1[i]];
        for (std::size_t j = 0; j < i; ++j) acc -= lu.l.at(i, j) * y[j];
        y[i] = acc;
    }
    return y;
}

double max_pivot(const StructuredLU& lu) {
    double m = 0.0;
    for (double p : lu.pivots) m = std::max(m, p);
    return m;
}

}  // namespace

std::vector<cx> lu_solve(const StructuredLU& lu, const std::vector<cx>& rhs) {
    const std::size_t n = lu.cols();
    if (lu.rows() != n || rhs.size() != n) throw InvalidInputError("lu_solve: square system required");
    const double floor = 1e-14 * max_pivot(lu);
    for (std::size_t k = 0; k < n; ++k)
        if (lu.pivots[k] <= floor) {
            const RankReport rep = estimate_rank(lu);
            throw SingularMatrixError("lu_solve: singular to working precision",
                                      rep.numerical_rank, rep.corank);
        }
    std::vector<cx> y = forward_sub(lu, rhs);
    std::vector<cx> xp(n);
    for (std::size_t i = n; i-- > 0;) {
        cx acc = y[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= lu.u.at(i, j) * xp[j];
        xp[i] = acc / lu.u.at(i, i);
    }
    std::vector<cx> x(n);
    for (std::size_t i = 0; i < n; ++i) x[lu.p2[i]] = xp[i];
    return x;
}

std::vector<cx> lu_solve_basic(const StructuredLU& lu, const std::vector<cx>& rhs) {
    const std::size_t m = lu.rows(), n = lu.cols(), r = lu.steps();
    if (m > n) throw InvalidInputError("lu_solve_basic: more rows than columns");
    if (rhs.size() != m) throw InvalidInputError("lu_solve_basic: rhs length mismatch");
    const double floor = 1e-12 * max_pivot(lu);
    for (std::size_t k = 0; k < r; ++k)
        if (lu.pivots[k] <= floor) {
            const RankReport rep = estimate_rank(lu);
            throw SingularMatrixError("lu_solve_basic: leading block rank collapse",
                                      rep.numerical_rank, rep.corank);
        }
    std::vector<cx> y = forward_sub(lu, rhs);
    std::vector<cx> xp(n, cx(0.0));
    for (std::size_t i = r; i-- > 0;) {
        cx acc = y[i];
        for (std::size_t j = i + 1; j < r; ++j) acc -= lu.u.at(i, j) * xp[j];
        xp[i] = acc / lu.u.at(i, i);
    }
    std::vector<cx> x(n);
    for (std::size_t i = 0; i < n; ++i) x[lu.p2[i]] = xp[i];
    return x;
}

DenseMatrix null_space_basis(const StructuredLU& lu, std::size_t rank) {
    const std::size_t n = lu.cols();
    if (rank >= n) throw InvalidInputError("null_space_basis: matrix has no (numerical) kernel at this rank");
    const std::size_t c = n - rank;
    DenseMatrix basis(n, c);
    for (std::size_t t = 0; t < c; ++t) {
        std::vector<cx> z(n, cx(0.0));
        z[rank + t] = cx(1.0);
        for (std::size_t i = rank; i-- > 0;) {
            cx acc = -lu.u.at(i, rank + t);
            for (std::size_t j = i + 1; j < rank; ++j) acc -= lu.u.at(i, j) * z[j];
            if (lu.pivots[i] == 0.0)
                throw SingularMatrixError("null_space_basis: zero pivot inside leading block", i,
                                          n - i);
            z[i] = acc / lu.u.at(i, i);
        }
        for (std::size_t i = 0; i < n; ++i) basis.at(lu.p2[i], t) = z[i];
    }
    return basis;
}

std::vector<cx> null_vector(const CauchyGenerators& cg, std::size_t rank) {
    if (rank >= cg.cols()) throw InvalidInputError("null_vector: full-rank input");
    const StructuredLU lu = gko_lu(cg, Pivoting::kGu);
    return null_space_basis(lu, rank).col(0);
}

}  // namespace agcd
