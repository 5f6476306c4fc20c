#include "agcd/displacement.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "agcd/bezout.hpp"
#include "agcd/errors.hpp"
#include "fft.hpp"

namespace agcd {

namespace {

constexpr double kPi = std::numbers::pi;

// The Fourier convention is load-bearing: F Z_n^1 F^H must be exactly
// diagonal with entries exp(2*pi*i*k/n).  Assert it once on n = 4 and fail
// loudly on drift.
void verify_fourier_convention() {
    const std::size_t n = 4;
    DenseMatrix z = circulant_shift(n, cx(1.0));
    // Columns of F: F[:,k], built through the same fft path used everywhere.
    DenseMatrix f(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<cx> e(n, cx(0.0));
        e[k] = cx(1.0);
        detail::fourier(e);
        f.set_col(k, e);
    }
    DenseMatrix fh(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) fh.at(i, j) = std::conj(f.at(j, i));
    DenseMatrix lhs = f * z * fh;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cx want = (i == j) ? std::polar(1.0, 2.0 * kPi * double(i) / double(n)) : cx(0.0);
            if (std::abs(lhs.at(i, j) - want) > 1e-12)
                throw std::logic_error(
                    "fourier convention drift: F Z F^H is not diag(1, w, w^2, ...)");
        }
}

std::once_flag convention_checked;

void ensure_convention() { std::call_once(convention_checked, verify_fourier_convention); }

double theta_angle(cx theta) {
    double phi = std::arg(theta);
    if (phi <= 0.0) phi += 2.0 * kPi;
    return phi;  // in (0, 2*pi]
}

// c[i] such that cyclic-shift(u) - Frob(f)*u = c * u[d-1] for any u; the
// column-to-column recurrence of multiplication matrices modulo f.
std::vector<cx> shift_minus_companion(const Polynomial& fmonic) {
    const int d = fmonic.degree();
    std::vector<cx> c(d);
    c[0] = cx(1.0) + fmonic.coeff(0);
    for (int i = 1; i < d; ++i) c[i] = fmonic.coeff(i);
    return c;
}

std::vector<cx> cyclic_down_shift(const std::vector<cx>& u) {
    const std::size_t d = u.size();
    std::vector<cx> s(d);
    for (std::size_t i = 0; i < d; ++i) s[i] = u[(i + d - 1) % d];
    return s;
}

// eta^j through the angle, avoiding accumulated pow() drift.
cx unit_power(cx eta, std::size_t j) { return std::polar(1.0, std::arg(eta) * double(j)); }

}  // namespace

DenseMatrix circulant_shift(std::size_t n, cx theta) {
    DenseMatrix z(n, n);
    for (std::size_t i = 1; i < n; ++i) z.at(i, i - 1) = cx(1.0);
    if (n > 0) z.at(0, n - 1) = theta;
    return z;
}

DenseMatrix displaced(const DenseMatrix& a, cx theta) {
    const std::size_t m = a.rows(), n = a.cols();
    DenseMatrix out(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cx za = a.at((i + m - 1) % m, j);
            const cx az = (j + 1 < n) ? a.at(i, j + 1) : theta * a.at(i, 0);
            out.at(i, j) = za - az;
        }
    return out;
}

cx default_theta(std::size_t nrows, std::size_t ncols) {
    const std::size_t g = std::gcd(nrows, ncols);
    return std::polar(1.0, kPi * double(g) / double(nrows));
}

ToeplitzGenerators compress_generators(ToeplitzGenerators tg, double tol) {
    const std::size_t a = tg.alpha;
    if (a == 0) return tg;

    PivotedQR qg = qr_col_pivoted(tg.g);                  // G P = Qg Rg
    DenseMatrix hh(tg.ncols, a);                          // H^H
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < tg.ncols; ++j) hh.at(j, i) = std::conj(tg.h.at(i, j));
    PivotedQR qh = qr_col_pivoted(hh);                    // H^H P2 = Qh Rh

    // Middle factor S = (Rg P^T)(P2 Rh^H), alpha x alpha.
    const std::size_t sg = qg.r.rows(), sh = qh.r.rows();
    DenseMatrix s(sg, sh);
    std::vector<std::size_t> ipg(a), iph(a);
    for (std::size_t t = 0; t < a; ++t) ipg[qg.perm[t]] = t;
    for (std::size_t t = 0; t < a; ++t) iph[qh.perm[t]] = t;
    for (std::size_t i = 0; i < sg; ++i)
        for (std::size_t j = 0; j < sh; ++j) {
            cx acc(0.0);
            for (std::size_t t = 0; t < a; ++t) acc += qg.r.at(i, ipg[t]) * std::conj(qh.r.at(j, iph[t]));
            s.at(i, j) = acc;
        }

    PivotedQR qs = qr_col_pivoted(s);
    const std::size_t r = qs.rank(tol);

    ToeplitzGenerators out;
    out.nrows = tg.nrows;
    out.ncols = tg.ncols;
    out.alpha = r;
    out.theta = tg.theta;
    out.g = DenseMatrix(tg.nrows, r);
    out.h = DenseMatrix(r, tg.ncols);
    if (r == 0) return out;

    // G' = Qg * Qs[:, :r]
    for (std::size_t c = 0; c < r; ++c) {
        std::vector<cx> col(sg, cx(0.0));
        col[c] = cx(1.0);
        col = qs.apply_q(std::move(col));       // Qs e_c, length sg
        col.resize(tg.nrows, cx(0.0));
        col = qg.apply_q(std::move(col));       // Qg (...), length nrows
        out.g.set_col(c, col);
    }
    // H' = (Rs P_s^T)[0:r, :] * Qh^H
    std::vector<std::size_t> ips(qs.perm.size());
    for (std::size_t t = 0; t < qs.perm.size(); ++t) ips[qs.perm[t]] = t;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<cx> t(tg.ncols, cx(0.0));
        for (std::size_t j = 0; j < sh; ++j) t[j] = std::conj(qs.r.at(i, ips[j]));
        t = qh.apply_q(std::move(t));           // Qh conj(row)^T
        for (std::size_t j = 0; j < tg.ncols; ++j) out.h.at(i, j) = std::conj(t[j]);
    }
    return out;
}

ToeplitzGenerators generators_of_mult_matrix(const Polynomial& f, const Polynomial& g, cx theta) {
    const int d = f.degree();
    if (d < 2) throw InvalidInputError("generators_of_mult_matrix: deg f must be >= 2");
    const Polynomial fm = monic(f);
    const std::size_t n = static_cast<std::size_t>(d);

    const std::vector<cx> first_col = mult_matrix_column(fm, g, 0);
    const std::vector<cx> last_col = mult_matrix_column(fm, g, n - 1);
    const std::vector<cx> last_row = mult_matrix_row(fm, g, n - 1);

    // nabla(M) = c * r^T + s * e_{d-1}^T with r the last row (last entry
    // dropped) and s the cyclically shifted last column minus theta times the
    // first column.
    const std::vector<cx> c = shift_minus_companion(fm);
    std::vector<cx> s = cyclic_down_shift(last_col);
    for (std::size_t i = 0; i < n; ++i) s[i] -= theta * first_col[i];

    ToeplitzGenerators tg;
    tg.nrows = tg.ncols = n;
    tg.alpha = 2;
    tg.theta = theta;
    tg.g = DenseMatrix(n, 2);
    tg.h = DenseMatrix(2, n);
    for (std::size_t i = 0; i < n; ++i) {
        tg.g.at(i, 0) = c[i];
        tg.g.at(i, 1) = s[i];
    }
    for (std::size_t j = 0; j + 1 < n; ++j) tg.h.at(0, j) = last_row[j];
    tg.h.at(1, n - 1) = cx(1.0);
    return compress_generators(std::move(tg));
}

ToeplitzGenerators generators_of_jacobian(const Polynomial& f, const std::vector<cx>& g_coeffs,
                                          const std::vector<cx>& v_coeffs, cx theta) {
    const int d = f.degree();
    if (d < 1) throw InvalidInputError("generators_of_jacobian: deg f must be >= 1");
    if (g_coeffs.empty() || v_coeffs.size() < 2)
        throw InvalidInputError("generators_of_jacobian: need deg v >= 1 and nonempty g");
    const std::size_t m = g_coeffs.size() - 1;
    const std::size_t k = v_coeffs.size() - 1;
    if (k >= static_cast<std::size_t>(d))
        throw InvalidInputError("generators_of_jacobian: deg v must be below deg f");
    if (std::abs(v_coeffs.back() - cx(1.0)) > 1e-9)
        throw InvalidInputError("generators_of_jacobian: v must be monic");

    const Polynomial fm = monic(f);
    const Polynomial gp{std::vector<cx>(g_coeffs)};
    const Polynomial vp{std::vector<cx>(v_coeffs)};
    const std::size_t n = static_cast<std::size_t>(d);
    const std::size_t w = m + k + 1;

    // g-block data: last-row entries of x^j v mod f for j = 0..m and the
    // final column x^m v mod f.
    std::vector<cx> grow(m + 1, cx(0.0));
    std::vector<cx> u_m;
    if (m <= n - 1) {
        const std::vector<cx> vrow = mult_matrix_row(fm, vp, n - 1);
        for (std::size_t j = 0; j <= m; ++j) grow[j] = vrow[j];
        u_m = mult_matrix_column(fm, vp, m);
    } else {
        const std::vector<cx> vrow = mult_matrix_row(fm, vp, n - 1);
        for (std::size_t j = 0; j < n; ++j) grow[j] = vrow[j];
        std::vector<cx> u = mult_matrix_column(fm, vp, n - 1);
        for (std::size_t j = n; j <= m; ++j) {
            companion_step(fm, u);
            grow[j] = u[n - 1];
        }
        u_m = std::move(u);
    }

    // v-block data: columns 0 and k-1 of M_g plus its last-row entries.
    const std::vector<cx> mg_col0 = mult_matrix_column(fm, gp, 0);
    const std::vector<cx> mg_colk = (k >= 1) ? mult_matrix_column(fm, gp, k - 1) : mg_col0;
    const std::vector<cx> mg_row = mult_matrix_row(fm, gp, n - 1);

    std::vector<cx> u0(n, cx(0.0));
    for (std::size_t i = 0; i <= k; ++i) u0[i] = v_coeffs[i];

    const std::vector<cx> c = shift_minus_companion(fm);
    std::vector<cx> s1 = cyclic_down_shift(u_m);
    for (std::size_t i = 0; i < n; ++i) s1[i] -= mg_col0[i];
    std::vector<cx> s2 = cyclic_down_shift(mg_colk);
    for (std::size_t i = 0; i < n; ++i) s2[i] -= theta * u0[i];

    ToeplitzGenerators tg;
    tg.nrows = n;
    tg.ncols = w;
    tg.alpha = 3;
    tg.theta = theta;
    tg.g = DenseMatrix(n, 3);
    tg.h = DenseMatrix(3, w);
    for (std::size_t i = 0; i < n; ++i) {
        tg.g.at(i, 0) = c[i];
        tg.g.at(i, 1) = s1[i];
        tg.g.at(i, 2) = s2[i];
    }
    for (std::size_t j = 0; j < m; ++j) tg.h.at(0, j) = grow[j];
    for (std::size_t t = 0; t + 1 < k; ++t) tg.h.at(0, m + 1 + t) = mg_row[t];
    tg.h.at(1, m) = cx(1.0);
    tg.h.at(2, w - 1) = cx(1.0);
    return compress_generators(std::move(tg));
}

ToeplitzGenerators generators_of_jacobian(const Polynomial& f, const Polynomial& g,
                                          const Polynomial& v, cx theta) {
    std::vector<cx> gc = g.coeffs();
    if (gc.empty()) gc.push_back(cx(0.0));
    return generators_of_jacobian(f, gc, v.coeffs(), theta);
}

CauchyGenerators toeplitz_to_cauchy(const ToeplitzGenerators& tg) {
    ensure_convention();
    const std::size_t m = tg.nrows, n = tg.ncols, a = tg.alpha;
    if (std::abs(tg.theta - cx(1.0)) < 1e-12)
        throw InvalidInputError("toeplitz_to_cauchy: theta = 1 makes the node sets collide");

    CauchyGenerators cg;
    cg.theta = tg.theta;
    const double phi = theta_angle(tg.theta);
    cg.eta = std::polar(1.0, phi / double(n));
    cg.d1.resize(m);
    for (std::size_t i = 0; i < m; ++i) cg.d1[i] = std::polar(1.0, 2.0 * kPi * double(i) / double(m));
    cg.d2.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        cg.d2[j] = cg.eta * std::polar(1.0, 2.0 * kPi * double(j) / double(n));

    // G_hat = F G (column-wise transforms).
    cg.g = DenseMatrix(m, a);
    for (std::size_t c = 0; c < a; ++c) {
        std::vector<cx> col = tg.g.col(c);
        detail::fourier(col);
        cg.g.set_col(c, col);
    }
    // H_hat = H D0^{-1} F^H (row-wise transforms; F is symmetric).
    cg.h = DenseMatrix(a, n);
    for (std::size_t r = 0; r < a; ++r) {
        std::vector<cx> row(n);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = tg.h.at(r, j) * std::conj(unit_power(cg.eta, j));
        detail::fourier_adjoint(row);
        for (std::size_t j = 0; j < n; ++j) cg.h.at(r, j) = row[j];
    }
    return cg;
}

DenseMatrix dense_cauchy_transform(const DenseMatrix& a, cx theta) {
    ensure_convention();
    const std::size_t m = a.rows(), n = a.cols();
    const double phi = theta_angle(theta);
    const cx eta = std::polar(1.0, phi / double(n));

    // A D0^{-1}, then F ... F^H by explicit unitary DFT matrices.
    DenseMatrix ad(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            ad.at(i, j) = a.at(i, j) * std::conj(unit_power(eta, j));

    DenseMatrix fm(m, m), fnh(n, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            fm.at(i, j) = std::polar(1.0 / std::sqrt(double(m)), 2.0 * kPi * double(i * j) / double(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            fnh.at(i, j) = std::polar(1.0 / std::sqrt(double(n)), -2.0 * kPi * double(i * j) / double(n));
    return fm * ad * fnh;
}

DenseMatrix cauchy_reconstruct(const CauchyGenerators& cg) {
    const std::size_t m = cg.rows(), n = cg.cols(), a = cg.alpha();
    DenseMatrix c(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cx num(0.0);
            for (std::size_t t = 0; t < a; ++t) num += cg.g.at(i, t) * cg.h.at(t, j);
            c.at(i, j) = num / (cg.d1[i] - cg.d2[j]);
        }
    return c;
}

std::vector<cx> to_cauchy_right(const CauchyGenerators& cg, std::vector<cx> v) {
    ensure_convention();
    if (v.size() != cg.cols()) throw InvalidInputError("to_cauchy_right: length mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) v[j] *= unit_power(cg.eta, j);
    detail::fourier(v);
    return v;
}

std::vector<cx> from_cauchy_right(const CauchyGenerators& cg, std::vector<cx> w) {
    ensure_convention();
    if (w.size() != cg.cols()) throw InvalidInputError("from_cauchy_right: length mismatch");
    detail::fourier_adjoint(w);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] *= std::conj(unit_power(cg.eta, j));
    return w;
}

std::vector<cx> to_cauchy_left(const CauchyGenerators& cg, std::vector<cx> b) {
    ensure_convention();
    if (b.size() != cg.rows()) throw InvalidInputError("to_cauchy_left: length mismatch");
    detail::fourier(b);
    return b;
}

std::vector<cx> from_cauchy_left(const CauchyGenerators& cg, std::vector<cx> b) {
    ensure_convention();
    if (b.size() != cg.rows()) throw InvalidInputError("from_cauchy_left: length mismatch");
    detail::fourier_adjoint(b);
    return b;
}

}  // namespace agcd
