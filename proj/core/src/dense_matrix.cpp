#include "agcd/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "agcd/errors.hpp"

namespace agcd {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = cx(1.0);
    return m;
}

std::vector<cx> DenseMatrix::col(std::size_t j) const {
    std::vector<cx> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<cx> DenseMatrix::row(std::size_t i) const {
    return std::vector<cx>(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

void DenseMatrix::set_col(std::size_t j, const std::vector<cx>& v) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cx& v : entries_) s += std::norm(v);
    return std::sqrt(s);
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (const cx& v : entries_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<cx> DenseMatrix::matvec(const std::vector<cx>& x) const {
    std::vector<cx> y(rows_, cx(0.0));
    for (std::size_t i = 0; i < rows_; ++i) {
        cx acc(0.0);
        const cx* row = entries_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cx aik = a.at(i, k);
            if (aik == cx(0.0)) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] = a.entries_[i] - b.entries_[i];
    return c;
}

namespace {

// Apply the Householder reflector (I - 2 v v^H / v^H v) to the trailing
// columns of a, rows k..m-1.
void apply_reflector(DenseMatrix& a, const std::vector<cx>& v, std::size_t k, std::size_t from_col) {
    double vnorm2 = 0.0;
    for (std::size_t i = k; i < a.rows(); ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) return;
    for (std::size_t j = from_col; j < a.cols(); ++j) {
        cx dot(0.0);
        for (std::size_t i = k; i < a.rows(); ++i) dot += std::conj(v[i]) * a.at(i, j);
        const cx factor = 2.0 * dot / vnorm2;
        for (std::size_t i = k; i < a.rows(); ++i) a.at(i, j) -= factor * v[i];
    }
}

void apply_reflector_vec(std::vector<cx>& b, const std::vector<cx>& v, std::size_t k) {
    double vnorm2 = 0.0;
    for (std::size_t i = k; i < b.size(); ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) return;
    cx dot(0.0);
    for (std::size_t i = k; i < b.size(); ++i) dot += std::conj(v[i]) * b[i];
    const cx factor = 2.0 * dot / vnorm2;
    for (std::size_t i = k; i < b.size(); ++i) b[i] -= factor * v[i];
}

}  // namespace

std::size_t PivotedQR::rank(double tol) const {
    if (diag_mags.empty()) return 0;
    const double top = diag_mags[0];
    if (top == 0.0) return 0;
    std::size_t r = 0;
    for (double m : diag_mags)
        if (m > tol * top) ++r;
    return r;
}

std::vector<cx> PivotedQR::apply_qh(std::vector<cx> b) const {
    for (std::size_t k = 0; k < reflectors.size(); ++k) apply_reflector_vec(b, reflectors[k], k);
    return b;
}

std::vector<cx> PivotedQR::apply_q(std::vector<cx> b) const {
    for (std::size_t k = reflectors.size(); k-- > 0;) apply_reflector_vec(b, reflectors[k], k);
    return b;
}

PivotedQR qr_col_pivoted(const DenseMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t steps = std::min(m, n);
    PivotedQR out;
    out.rows = m;
    out.cols = n;
    out.perm.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.perm[j] = j;

    DenseMatrix work = a;
    std::vector<double> colnorm2(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) colnorm2[j] += std::norm(work.at(i, j));

    for (std::size_t k = 0; k < steps; ++k) {
        // Recompute remaining column norms; n is small enough that the
        // downdating trick is not worth its numerical hazards here.
        std::size_t best = k;
        double best_norm = -1.0;
        for (std::size_t j = k; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = k; i < m; ++i) s += std::norm(work.at(i, j));
            colnorm2[j] = s;
            if (s > best_norm) {
                best_norm = s;
                best = j;
            }
        }
        if (best != k) {
            for (std::size_t i = 0; i < m; ++i) std::swap(work.at(i, k), work.at(i, best));
            std::swap(colnorm2[k], colnorm2[best]);
            std::swap(out.perm[k], out.perm[best]);
        }

        std::vector<cx> v(m, cx(0.0));
        double xnorm = std::sqrt(best_norm);
        const cx x0 = work.at(k, k);
        if (xnorm > 0.0) {
            const cx beta = (x0 == cx(0.0)) ? cx(-xnorm) : -(x0 / std::abs(x0)) * xnorm;
            for (std::size_t i = k; i < m; ++i) v[i] = work.at(i, k);
            v[k] -= beta;
            apply_reflector(work, v, k, k);
            work.at(k, k) = beta;  // clean out rounding
            for (std::size_t i = k + 1; i < m; ++i) work.at(i, k) = cx(0.0);
        }
        out.reflectors.push_back(std::move(v));
    }

    out.r = DenseMatrix(steps, n);
    for (std::size_t i = 0; i < steps; ++i)
        for (std::size_t j = i; j < n; ++j) out.r.at(i, j) = work.at(i, j);
    out.diag_mags.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) out.diag_mags[i] = std::abs(out.r.at(i, i));
    return out;
}

std::size_t numerical_rank(const DenseMatrix& a, double tol) {
    return qr_col_pivoted(a).rank(tol);
}

DenseMatrix kernel_basis(const DenseMatrix& a, double tol) {
    const std::size_t n = a.cols();
    PivotedQR qr = qr_col_pivoted(a);
    const std::size_t r = qr.rank(tol);
    const std::size_t c = n - r;
    DenseMatrix k(n, c);
    if (c == 0) return k;

    // Solve R11 * X = -R12, kernel columns are P * [X; I].
    for (std::size_t t = 0; t < c; ++t) {
        std::vector<cx> x(r, cx(0.0));
        for (std::size_t i = r; i-- > 0;) {
            cx acc = -qr.r.at(i, r + t);
            for (std::size_t j = i + 1; j < r; ++j) acc -= qr.r.at(i, j) * x[j];
            x[i] = acc / qr.r.at(i, i);
        }
        for (std::size_t i = 0; i < r; ++i) k.at(qr.perm[i], t) = x[i];
        k.at(qr.perm[r + t], t) = cx(1.0);
    }
    return k;
}

std::vector<cx> gepp_solve(DenseMatrix a, std::vector<cx> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw InvalidInputError("gepp_solve: shape mismatch");
    const double scale = a.max_abs();

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double piv_mag = std::abs(a.at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = std::abs(a.at(i, k));
            if (m > piv_mag) {
                piv_mag = m;
                piv = i;
            }
        }
        if (piv_mag <= 1e-14 * scale)
            throw SingularMatrixError("gepp_solve: matrix singular to working precision", k, n - k);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const cx l = a.at(i, k) / a.at(k, k);
            if (l == cx(0.0)) continue;
            for (std::size_t j = k + 1; j < n; ++j) a.at(i, j) -= l * a.at(k, j);
            b[i] -= l * b[k];
        }
    }
    std::vector<cx> x(n);
    for (std::size_t i = n; i-- > 0;) {
        cx acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a.at(i, j) * x[j];
        x[i] = acc / a.at(i, i);
    }
    return x;
}

std::vector<cx> min_norm_least_squares(const DenseMatrix& a, const std::vector<cx>& b,
                                       double rank_tol) {
    const std::size_t n = a.cols();
    PivotedQR qr = qr_col_pivoted(a);
    const std::size_t r = qr.rank(rank_tol);
    std::vector<cx> y(n, cx(0.0));
    if (r == 0) return y;

    // A P = Q [R1; 0];  R1^H = Q2 T  =>  A P = Q T^H Q2^H.
    DenseMatrix r1h(n, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) r1h.at(j, i) = std::conj(qr.r.at(i, j));
    PivotedQR qr2 = qr_col_pivoted(r1h);  // pivoting is harmless here; perm is identity-applied below

    // c = leading r entries of Q^H b.
    std::vector<cx> c = qr.apply_qh(b);
    c.resize(r);

    // Solve T^H w = c (forward substitution on the conjugate transpose of
    // qr2.r), honoring qr2's column permutation.
    std::vector<cx> w(r, cx(0.0));
    for (std::size_t i = 0; i < r; ++i) {
        // Row i of T^H corresponds to column qr2.perm... T = qr2.r with
        // columns permuted by qr2.perm; undo it explicitly.
        cx acc = c[qr2.perm[i]];
        for (std::size_t j = 0; j < i; ++j) acc -= std::conj(qr2.r.at(j, i)) * w[j];
        w[i] = acc / std::conj(qr2.r.at(i, i));
    }

    // z = Q2 [w; 0], then undo the outer column pivoting.
    std::vector<cx> z(n, cx(0.0));
    for (std::size_t i = 0; i < r; ++i) z[i] = w[i];
    z = qr2.apply_q(std::move(z));
    for (std::size_t j = 0; j < n; ++j) y[qr.perm[j]] = z[j];
    return y;
}

}  // namespace agcd
