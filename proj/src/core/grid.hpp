#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "common.hpp"

namespace ipm {

// Periodic computational box [-L, L)^2 sampled on an n x n grid,
// n a power of two. Mode m has wavenumber pi*m/L, m in [-n/2, n/2).
struct GridSpec {
    std::uint32_t n = 0;
    double half_width = 0.0;

    GridSpec() = default;
    GridSpec(std::uint32_t points_per_axis, double half_width_in);

    double spacing() const { return 2.0 * half_width / static_cast<double>(n); }
    double node(std::uint32_t i) const { return -half_width + spacing() * static_cast<double>(i); }
    // Signed mode index for FFT bin k.
    int mode(std::uint32_t k) const {
        return k <= n / 2 - 1 ? static_cast<int>(k) : static_cast<int>(k) - static_cast<int>(n);
    }
    double wavenumber(int m) const { return M_PI * static_cast<double>(m) / half_width; }
    std::size_t size() const { return static_cast<std::size_t>(n) * n; }

    bool operator==(const GridSpec& o) const { return n == o.n && half_width == o.half_width; }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

GridSpec make_grid(std::uint32_t points_per_axis, double half_width);

// Real samples on a GridSpec, row-major with x1 as the slow index:
// values[i1 * n + i2] = v(x1_{i1}, x2_{i2}).
struct ScalarField {
    GridSpec grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const GridSpec& g) : grid(g), values(g.size(), 0.0) {}

    double& at(std::uint32_t i1, std::uint32_t i2) {
        return values[static_cast<std::size_t>(i1) * grid.n + i2];
    }
    double at(std::uint32_t i1, std::uint32_t i2) const {
        return values[static_cast<std::size_t>(i1) * grid.n + i2];
    }
};

struct VelocityField {
    ScalarField u1;
    ScalarField u2;
};

bool all_finite(const ScalarField& f);
double max_abs(const ScalarField& f);

// Deviation from the paper's symmetric class: even in x1, odd in x2.
// Returns max |v(x) - v(-x1,x2)| and max |v(x) + v(x1,-x2)| combined.
double symmetry_defect(const ScalarField& f);

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double s, const ScalarField& a);

}  // namespace ipm
