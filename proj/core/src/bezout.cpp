#include "agcd/bezout.hpp"

#include <algorithm>

#include "agcd/errors.hpp"

namespace agcd {

namespace {

// The Bezout recurrence, Hankel solves and matrix-vector products run on
// 80-bit intermediates: the downstream displacement generators are compared
// against dense oracles at 1e-11 relative, which plain double does not leave
// enough headroom for at degree 40.
using lcx = std::complex<long double>;

cx to_cx(const lcx& v) {
    return cx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

std::vector<lcx> widen(const std::vector<cx>& v) { return {v.begin(), v.end()}; }

lcx coeff_ld(const Polynomial& p, int i) {
    return i >= 0 && i <= p.degree() ? lcx(p.coeffs()[i]) : lcx(0.0);
}

// theta[i][j] of (f(x)g(y) - f(y)g(x))/(x - y), row-major n x n.
std::vector<lcx> bezout_entries(const Polynomial& f, const Polynomial& g, int n) {
    std::vector<lcx> b(std::size_t(n) * n, lcx(0.0));
    for (int i = n - 1; i >= 0; --i)
        for (int j = 0; j < n; ++j) {
            lcx v = coeff_ld(f, i + 1) * coeff_ld(g, j) - coeff_ld(f, j) * coeff_ld(g, i + 1);
            if (i + 1 < n && j >= 1) v += b[std::size_t(i + 1) * n + (j - 1)];
            b[std::size_t(i) * n + j] = v;
        }
    return b;
}

// B_{g,f} = -B_{f,g}; with this orientation the Barnett product
// B_(g,f) * B_(1,f)^{-1} reproduces the multiplication matrix with the sign
// that satisfies the eigenvalue property (columns are x^j*g mod f).
std::vector<lcx> bezout_gf_entries(const Polynomial& f, const Polynomial& g, int n) {
    return bezout_entries(g, f, n);
}

// Solve hankel_bezout(f) w = rhs; row i determines w[d-1-i] from the bottom
// row up.
std::vector<lcx> hankel_solve(const Polynomial& f, const std::vector<lcx>& rhs) {
    const int d = f.degree();
    std::vector<lcx> w(d);
    const lcx lead = coeff_ld(f, d);
    for (int i = d - 1; i >= 0; --i) {
        lcx acc = rhs[i];
        const int t = d - 1 - i;
        for (int j = 0; j < t; ++j) acc += coeff_ld(f, i + j + 1) * w[j];
        w[t] = -acc / lead;
    }
    return w;
}

std::vector<lcx> matvec(const std::vector<lcx>& b, int n, const std::vector<lcx>& x) {
    std::vector<lcx> y(n, lcx(0.0));
    for (int i = 0; i < n; ++i) {
        lcx acc(0.0);
        const lcx* row = b.data() + std::size_t(i) * n;
        for (int j = 0; j < n; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

Polynomial normalized_multiplier(const Polynomial& f, const Polynomial& g, int d) {
    // The multiplication matrix depends on g only through its residue class;
    // Barnett needs deg g <= deg f.
    if (g.degree() > d) return Polynomial(reduce_mod(f, g));
    return g;
}

std::vector<lcx> unit_ld(int n, std::size_t j) {
    std::vector<lcx> e(n, lcx(0.0));
    e[j] = lcx(1.0);
    return e;
}

}  // namespace

DenseMatrix bezout_matrix(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero())
        throw InvalidInputError("bezout_matrix: both polynomials are zero");
    const int n = std::max({f.degree(), g.degree(), 0});
    const std::vector<lcx> b = bezout_entries(f, g, n);
    DenseMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = to_cx(b[std::size_t(i) * n + j]);
    return out;
}

DenseMatrix hankel_bezout(const Polynomial& f) {
    if (f.degree() < 1) throw InvalidInputError("hankel_bezout: degree must be >= 1");
    const int d = f.degree();
    DenseMatrix b(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; i + j < d; ++j) b.at(i, j) = -f.coeff(i + j + 1);
    return b;
}

std::vector<cx> hankel_bezout_solve(const Polynomial& f, const std::vector<cx>& rhs) {
    const int d = f.degree();
    if (d < 1) throw InvalidInputError("hankel_bezout_solve: degree must be >= 1");
    if (rhs.size() != static_cast<std::size_t>(d))
        throw InvalidInputError("hankel_bezout_solve: rhs length mismatch");
    const std::vector<lcx> w = hankel_solve(f, widen(rhs));
    std::vector<cx> out(d);
    for (int i = 0; i < d; ++i) out[i] = to_cx(w[i]);
    return out;
}

DenseMatrix barnett_mult_matrix(const Polynomial& f, const Polynomial& g) {
    const int d = f.degree();
    if (d < 1) throw InvalidInputError("barnett_mult_matrix: deg f must be >= 1");
    const Polynomial gr = normalized_multiplier(f, g, d);
    const std::vector<lcx> bgf = bezout_gf_entries(f, gr, d);
    DenseMatrix m(d, d);
    for (int j = 0; j < d; ++j) {
        const std::vector<lcx> col = matvec(bgf, d, hankel_solve(f, unit_ld(d, j)));
        for (int i = 0; i < d; ++i) m.at(i, j) = to_cx(col[i]);
    }
    return m;
}

std::vector<cx> mult_matrix_column(const Polynomial& f, const Polynomial& g, std::size_t j) {
    const int d = f.degree();
    if (d < 1) throw InvalidInputError("mult_matrix_column: deg f must be >= 1");
    if (j >= static_cast<std::size_t>(d))
        throw InvalidInputError("mult_matrix_column: index out of range");
    const Polynomial gr = normalized_multiplier(f, g, d);
    const std::vector<lcx> col =
        matvec(bezout_gf_entries(f, gr, d), d, hankel_solve(f, unit_ld(d, j)));
    std::vector<cx> out(d);
    for (int i = 0; i < d; ++i) out[i] = to_cx(col[i]);
    return out;
}

std::vector<cx> mult_matrix_row(const Polynomial& f, const Polynomial& g, std::size_t j) {
    const int d = f.degree();
    if (d < 1) throw InvalidInputError("mult_matrix_row: deg f must be >= 1");
    if (j >= static_cast<std::size_t>(d))
        throw InvalidInputError("mult_matrix_row: index out of range");
    const Polynomial gr = normalized_multiplier(f, g, d);
    // Row j of M = column j of M^T = B(1,f)^{-1} (B(g,f) e_j), both Bezout
    // factors being symmetric.
    const std::vector<lcx> row =
        hankel_solve(f, matvec(bezout_gf_entries(f, gr, d), d, unit_ld(d, j)));
    std::vector<cx> out(d);
    for (int i = 0; i < d; ++i) out[i] = to_cx(row[i]);
    return out;
}

DenseMatrix frobenius(const Polynomial& f) {
    const int d = f.degree();
    if (d < 1) throw InvalidInputError("frobenius: degree must be >= 1");
    DenseMatrix c(d, d);
    const cx lead = f.leading();
    for (int i = 1; i < d; ++i) c.at(i, i - 1) = cx(1.0);
    for (int i = 0; i < d; ++i) c.at(i, d - 1) = -f.coeff(i) / lead;
    return c;
}

void companion_step(const Polynomial& fmonic, std::vector<cx>& v) {
    const int d = fmonic.degree();
    const cx top = v[d - 1];
    for (int i = d - 1; i > 0; --i) v[i] = v[i - 1] - fmonic.coeff(i) * top;
    v[0] = -fmonic.coeff(0) * top;
}

std::vector<cx> reduce_mod(const Polynomial& f, const Polynomial& p) {
    return reduce_mod(f, p.coeffs());
}

std::vector<cx> reduce_mod(const Polynomial& f, const std::vector<cx>& p_coeffs) {
    const int d = f.degree();
    if (d < 1) throw InvalidInputError("reduce_mod: deg f must be >= 1");
    const Polynomial fm = monic(f);
    std::vector<cx> r(d, cx(0.0));
    const int m = static_cast<int>(p_coeffs.size()) - 1;
    for (int i = 0; i <= std::min(m, d - 1); ++i) r[i] = p_coeffs[i];
    if (m < d) return r;

    // xpow holds x^j mod f, advanced by companion action.
    std::vector<cx> xpow(d, cx(0.0));
    xpow[d - 1] = cx(1.0);
    companion_step(fm, xpow);  // x^d mod f
    for (int j = d; j <= m; ++j) {
        const cx pj = p_coeffs[j];
        if (pj != cx(0.0))
            for (int i = 0; i < d; ++i) r[i] += pj * xpow[i];
        if (j < m) companion_step(fm, xpow);
    }
    return r;
}

}  // namespace agcd
