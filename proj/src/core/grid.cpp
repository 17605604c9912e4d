#include "grid.hpp"

#include <algorithm>
#include <cmath>

namespace ipm {

namespace {
bool is_pow2(std::uint32_t v) { return v != 0 && (v & (v - 1)) == 0; }
}  // namespace

GridSpec::GridSpec(std::uint32_t points_per_axis, double half_width_in)
    : n(points_per_axis), half_width(half_width_in) {
    if (!is_pow2(n) || n < 16)
        fail(ErrorKind::InvalidArgument, "points_per_axis must be a power of two >= 16");
    if (!(half_width > 0.0))
        fail(ErrorKind::InvalidArgument, "half_width must be positive");
}

GridSpec make_grid(std::uint32_t points_per_axis, double half_width) {
    return GridSpec(points_per_axis, half_width);
}

bool all_finite(const ScalarField& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) return false;
    return true;
}

double max_abs(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double symmetry_defect(const ScalarField& f) {
    const std::uint32_t n = f.grid.n;
    double d = 0.0;
    for (std::uint32_t i1 = 0; i1 < n; ++i1) {
        const std::uint32_t r1 = (n - i1) % n;  // x1 -> -x1
        for (std::uint32_t i2 = 0; i2 < n; ++i2) {
            const std::uint32_t r2 = (n - i2) % n;  // x2 -> -x2
            const double v = f.at(i1, i2);
            d = std::max(d, std::abs(v - f.at(r1, i2)));
            d = std::max(d, std::abs(v + f.at(i1, r2)));
        }
    }
    return d;
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    if (a.grid != b.grid) fail(ErrorKind::InvalidArgument, "field grids differ");
    ScalarField r(a.grid);
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = a.values[i] + b.values[i];
    return r;
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    if (a.grid != b.grid) fail(ErrorKind::InvalidArgument, "field grids differ");
    ScalarField r(a.grid);
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = a.values[i] - b.values[i];
    return r;
}

ScalarField operator*(double s, const ScalarField& a) {
    ScalarField r(a.grid);
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = s * a.values[i];
    return r;
}

}  // namespace ipm
