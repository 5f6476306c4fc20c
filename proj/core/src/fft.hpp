#pragma once

#include <vector>

#include "agcd/poly.hpp"

namespace agcd::detail {

/// In-place unitary DFT with the positive-exponent convention:
///   (F x)[j] = (1/sqrt(n)) * sum_k x[k] * exp(+2*pi*i*j*k/n).
/// With this convention F * Z_n^1 * F^H = diag(1, w, w^2, ...), w = e^{2πi/n}.
void fourier(std::vector<cx>& x);

/// In-place adjoint transform F^H (negative exponent, same scaling).
void fourier_adjoint(std::vector<cx>& x);

}  // namespace agcd::detail
