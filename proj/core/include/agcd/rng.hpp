#pragma once

#include <cstdint>
#include <random>

#include "agcd/poly.hpp"

namespace agcd {

/// Deterministic random source: mt19937_64 with an explicit 53-bit mantissa
/// mapping, so identical seeds yield bit-identical streams across standard
/// library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform in [-a, a).
    double symmetric(double a) { return uniform(-a, a); }

    /// Uniform over the closed unit disc, by rejection from the square.
    cx unit_disc() {
        for (;;) {
            const double re = symmetric(1.0);
            const double im = symmetric(1.0);
            if (re * re + im * im <= 1.0) return cx(re, im);
        }
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace agcd
