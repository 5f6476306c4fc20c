#pragma once

#include <vector>

#include "agcd/dense_matrix.hpp"
#include "agcd/poly.hpp"
#include "agcd/rng.hpp"

namespace agcd::test {

/// Polynomial from real coefficients, ascending degree.
inline Polynomial poly_r(std::initializer_list<double> coeffs) {
    std::vector<cx> c;
    for (double v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

inline Polynomial random_poly(Rng& rng, std::size_t degree, bool monic_lead = false) {
    std::vector<cx> c(degree + 1);
    for (std::size_t i = 0; i <= degree; ++i) c[i] = rng.unit_disc();
    if (monic_lead)
        c[degree] = cx(1.0);
    else
        while (std::abs(c[degree]) < 0.2) c[degree] = rng.unit_disc();
    return Polynomial(std::move(c));
}

inline double vec_norm(const std::vector<cx>& v) {
    double s = 0.0;
    for (const cx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

inline double vec_dist(const std::vector<cx>& a, const std::vector<cx>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

inline double mat_dist(const DenseMatrix& a, const DenseMatrix& b) {
    return (a - b).frobenius_norm();
}

}  // namespace agcd::test
