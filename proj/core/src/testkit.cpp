#include "agcd/testkit.hpp"

#include <algorithm>
#include <cmath>

#include "agcd/errors.hpp"

namespace agcd::testkit {

Polynomial random_monic(Rng& rng, std::size_t degree) {
    std::vector<cx> c(degree + 1, cx(0.0));
    for (std::size_t i = 0; i < degree; ++i) c[i] = cx(rng.symmetric(1.0));
    c[degree] = cx(1.0);
    return Polynomial(std::move(c));
}

PlantedInstance plant_instance(std::size_t n, std::size_t m, std::size_t gcd_degree, double eta,
                               std::uint64_t seed) {
    if (gcd_degree > std::min(n, m))
        throw InvalidInputError("plant_instance: gcd degree exceeds a polynomial degree");
    if (n == 0 || m == 0) throw InvalidInputError("plant_instance: degrees must be positive");

    Rng rng(seed);
    PlantedInstance inst;
    inst.gcd_degree = gcd_degree;
    inst.eta = eta;
    inst.seed = seed;
    inst.gcd_exact = random_monic(rng, gcd_degree);
    inst.cofactor_exact = random_monic(rng, n - gcd_degree);
    const Polynomial w = random_monic(rng, m - gcd_degree);
    inst.f = mul(inst.cofactor_exact, inst.gcd_exact);
    inst.g_exact = mul(w, inst.gcd_exact);

    std::vector<cx> gobs(m + 1, cx(0.0));
    for (std::size_t i = 0; i <= m; ++i) gobs[i] = inst.g_exact.coeff(i) + cx(rng.symmetric(eta));
    inst.g_observed = Polynomial(std::move(gobs));
    return inst;
}

DenseMatrix brute_force_mult_matrix(const Polynomial& f, const Polynomial& g) {
    const int d = f.degree();
    if (d < 1) throw InvalidInputError("brute_force_mult_matrix: deg f must be >= 1");
    DenseMatrix mat(d, d);
    Polynomial xj_g = g;
    for (int j = 0; j < d; ++j) {
        const Polynomial r = divmod(xj_g, f).second;
        for (int i = 0; i < d; ++i) mat.at(i, j) = r.coeff(i);
        // multiply by x for the next column
        std::vector<cx> c(xj_g.coeffs().size() + 1, cx(0.0));
        for (std::size_t i = 0; i < xj_g.coeffs().size(); ++i) c[i + 1] = xj_g.coeffs()[i];
        xj_g = Polynomial(std::move(c));
    }
    return mat;
}

std::vector<cx> dense_gepp_solve(const DenseMatrix& a, const std::vector<cx>& b) {
    return gepp_solve(a, b);
}

std::vector<cx> dense_least_squares(const DenseMatrix& a, const std::vector<cx>& b) {
    return min_norm_least_squares(a, b);
}

Polynomial euclid_gcd(const Polynomial& f, const Polynomial& g, double tol) {
    if (f.is_zero() && g.is_zero()) return Polynomial();
    if (f.is_zero()) return monic(g);
    if (g.is_zero()) return monic(f);

    Polynomial a = monic(f);
    Polynomial b = monic(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    for (;;) {
        if (b.is_zero()) return monic(a);
        if (b.degree() == 0) return Polynomial{cx(1.0)};
        Polynomial r = divmod(a, b).second;
        // Trim trailing coefficients drowned in rounding noise.
        std::vector<cx> c = r.coeffs();
        const double floor = tol * std::max(1.0, r.max_abs());
        while (!c.empty() && std::abs(c.back()) <= floor) c.pop_back();
        r = Polynomial(std::move(c));
        a = std::move(b);
        b = r.is_zero() ? Polynomial() : monic(r);
    }
}

std::vector<cx> residual_direct(const Polynomial& fmonic, const std::vector<cx>& g_coeffs,
                                const std::vector<cx>& v_coeffs) {
    const int d = fmonic.degree();
    // g*v by schoolbook convolution on the raw vectors.
    std::vector<cx> prod(g_coeffs.size() + v_coeffs.size() - 1, cx(0.0));
    for (std::size_t i = 0; i < g_coeffs.size(); ++i)
        for (std::size_t j = 0; j < v_coeffs.size(); ++j) prod[i + j] += g_coeffs[i] * v_coeffs[j];
    // Long division by the monic modulus, remainder only.
    for (int t = static_cast<int>(prod.size()) - 1; t >= d; --t) {
        const cx q = prod[t];
        if (q == cx(0.0)) continue;
        prod[t] = cx(0.0);
        for (int i = 0; i < d; ++i) prod[t - d + i] -= q * fmonic.coeff(i);
    }
    prod.resize(d, cx(0.0));
    return prod;
}

DenseMatrix dense_jacobian(const Polynomial& fmonic, const std::vector<cx>& g_coeffs,
                           const std::vector<cx>& v_coeffs) {
    const int d = fmonic.degree();
    const std::size_t m = g_coeffs.size() - 1;
    const std::size_t k = v_coeffs.size() - 1;
    DenseMatrix j(d, m + k + 1);

    // d(M_g v)/dg_t = x^t * v mod f.
    for (std::size_t t = 0; t <= m; ++t) {
        std::vector<cx> xt(t + 1, cx(0.0));
        xt[t] = cx(1.0);
        const std::vector<cx> col = residual_direct(fmonic, xt, v_coeffs);
        for (int i = 0; i < d; ++i) j.at(i, t) = col[i];
    }
    // d(M_g v)/dv_t = x^t * g mod f, t = 0..k-1.
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<cx> xt(t + 1, cx(0.0));
        xt[t] = cx(1.0);
        const std::vector<cx> col = residual_direct(fmonic, g_coeffs, xt);
        for (int i = 0; i < d; ++i) j.at(i, m + 1 + t) = col[i];
    }
    return j;
}

DenseMatrix finite_difference_jacobian(const Polynomial& f, const Polynomial& g,
                                       const Polynomial& v, double step) {
    if (step <= 0.0) throw InvalidInputError("finite_difference_jacobian: step must be positive");
    const Polynomial fm = monic(f);
    const int d = fm.degree();
    std::vector<cx> gc = g.coeffs();
    if (gc.empty()) gc.push_back(cx(0.0));
    std::vector<cx> vc = v.coeffs();
    const std::size_t m = gc.size() - 1;
    const std::size_t k = vc.size() - 1;
    const std::size_t w = m + k + 1;

    DenseMatrix j(d, w);
    for (std::size_t t = 0; t < w; ++t) {
        std::vector<cx> gp = gc, gm = gc, vp = vc, vm = vc;
        if (t <= m) {
            gp[t] += step;
            gm[t] -= step;
        } else {
            vp[t - m - 1] += step;
            vm[t - m - 1] -= step;
        }
        const std::vector<cx> rp = residual_direct(fm, gp, vp);
        const std::vector<cx> rm = residual_direct(fm, gm, vm);
        for (int i = 0; i < d; ++i) j.at(i, t) = (rp[i] - rm[i]) / (2.0 * step);
    }
    return j;
}

}  // namespace agcd::testkit
