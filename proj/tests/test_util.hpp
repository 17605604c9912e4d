#pragma once

#include <cmath>
#include <random>

#include "fft.hpp"
#include "grid.hpp"
#include "spectral.hpp"

namespace ipm::test {

// Band-limited random mean-zero field: modes below n/8 with amplitudes from
// a seeded generator, symmetrized on request. Deterministic by construction.
inline ScalarField random_smooth_field(const GridSpec& grid, unsigned seed,
                                       bool symmetric = false) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    ScalarField f(grid);
    const int kmax = static_cast<int>(grid.n) / 8;
    const double L = grid.half_width;
    for (int m1 = 0; m1 <= kmax; ++m1) {
        for (int m2 = 1; m2 <= kmax; ++m2) {
            const double a = amp(rng) / (1.0 + m1 * m1 + m2 * m2);
            const double b = amp(rng) / (1.0 + m1 * m1 + m2 * m2);
            for (std::uint32_t i1 = 0; i1 < grid.n; ++i1) {
                const double x1 = grid.node(i1);
                for (std::uint32_t i2 = 0; i2 < grid.n; ++i2) {
                    const double x2 = grid.node(i2);
                    // cos(m1 pi x1/L) sin(m2 pi x2/L) is even in x1, odd in x2.
                    double v = a * std::cos(M_PI * m1 * x1 / L) * std::sin(M_PI * m2 * x2 / L);
                    if (!symmetric)
                        v += b * std::sin(M_PI * (m1 + 1) * x1 / L) * std::cos(M_PI * m2 * x2 / L);
                    f.at(i1, i2) += v;
                }
            }
        }
    }
    return f;
}

inline double rel_gap(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace ipm::test
