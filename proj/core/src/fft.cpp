#include "fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

namespace agcd::detail {

namespace {

// FFTW planning is not thread-safe; execution on caller-owned buffers is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

void run_fftw(std::vector<cx>& x, int sign) {
    const std::size_t n = x.size();
    if (n <= 1) return;
    auto* data = reinterpret_cast<fftw_complex*>(x.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(n), data, data, sign, FFTW_ESTIMATE);
    }
    fftw_execute_dft(plan, data, data);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (cx& v : x) v *= s;
}

}  // namespace

void fourier(std::vector<cx>& x) { run_fftw(x, FFTW_BACKWARD); }

void fourier_adjoint(std::vector<cx>& x) { run_fftw(x, FFTW_FORWARD); }

}  // namespace agcd::detail
