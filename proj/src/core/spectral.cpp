#include "spectral.hpp"

#include <algorithm>
#include <cmath>

namespace ipm {

namespace {

// Applies g(xi) to every stored mode; g receives (xi1, xi2, m1, m2).
template <typename G>
void for_each_mode(SpectralField& f, G&& g) {
    const GridSpec& grid = f.grid;
    const std::uint32_t ny = f.ny();
    for (std::uint32_t k1 = 0; k1 < grid.n; ++k1) {
        const int m1 = grid.mode(k1);
        const double xi1 = grid.wavenumber(m1);
        for (std::uint32_t k2 = 0; k2 < ny; ++k2) {
            const int m2 = static_cast<int>(k2);
            const double xi2 = grid.wavenumber(m2);
            g(f.coeff[static_cast<std::size_t>(k1) * ny + k2], xi1, xi2, m1, m2);
        }
    }
}

bool is_nyquist(const GridSpec& g, int m1, int m2) {
    const int half = static_cast<int>(g.n) / 2;
    return m1 == -half || m2 == half;
}

}  // namespace

SpectralField riesz(const SpectralField& f, int axis) {
    if (axis != 1 && axis != 2) fail(ErrorKind::InvalidArgument, "riesz axis must be 1 or 2");
    SpectralField out = f;
    for_each_mode(out, [&](std::complex<double>& c, double xi1, double xi2, int m1, int m2) {
        const double mag = std::hypot(xi1, xi2);
        if (mag == 0.0 || is_nyquist(out.grid, m1, m2)) {
            c = 0.0;
            return;
        }
        const double xa = axis == 1 ? xi1 : xi2;
        c *= std::complex<double>(0.0, xa / mag);
    });
    return out;
}

SpectralField derivative(const SpectralField& f, int axis) {
    if (axis != 1 && axis != 2) fail(ErrorKind::InvalidArgument, "derivative axis must be 1 or 2");
    SpectralField out = f;
    for_each_mode(out, [&](std::complex<double>& c, double xi1, double xi2, int m1, int m2) {
        if (is_nyquist(out.grid, m1, m2)) {
            c = 0.0;
            return;
        }
        const double xa = axis == 1 ? xi1 : xi2;
        c *= std::complex<double>(0.0, xa);
    });
    return out;
}

void velocity_spectral(const SpectralField& rho, SpectralField& u1, SpectralField& u2) {
    u1 = rho;
    u2 = rho;
    for_each_mode(u1, [](std::complex<double>& c, double xi1, double xi2, int, int) {
        const double q = xi1 * xi1 + xi2 * xi2;
        c = q == 0.0 ? 0.0 : c * (xi1 * xi2 / q);
    });
    for_each_mode(u2, [](std::complex<double>& c, double xi1, double xi2, int, int) {
        const double q = xi1 * xi1 + xi2 * xi2;
        c = q == 0.0 ? 0.0 : c * (-xi1 * xi1 / q);
    });
}

VelocityField velocity(const ScalarField& rho) {
    SpectralField rh = to_spectral(rho);
    SpectralField u1h, u2h;
    velocity_spectral(rh, u1h, u2h);
    return VelocityField{to_physical(u1h), to_physical(u2h)};
}

ScalarField dissipation(const ScalarField& rho) {
    SpectralField rh = to_spectral(rho);
    for_each_mode(rh, [](std::complex<double>& c, double xi1, double xi2, int, int) {
        const double q = xi1 * xi1 + xi2 * xi2;
        c = q == 0.0 ? 0.0 : c * (-xi1 * xi1 / q);
    });
    return to_physical(rh);
}

double sobolev_norm(const SpectralField& f, double s) {
    if (s < 0.0 || s > 4.5) fail(ErrorKind::InvalidArgument, "sobolev_norm order must be in [0, 4.5]");
    const GridSpec& grid = f.grid;
    const std::uint32_t ny = f.ny();
    double acc = 0.0;
    for (std::uint32_t k1 = 0; k1 < grid.n; ++k1) {
        const double xi1 = grid.wavenumber(grid.mode(k1));
        for (std::uint32_t k2 = 0; k2 < ny; ++k2) {
            const double xi2 = grid.wavenumber(static_cast<int>(k2));
            // Interior columns stand for a conjugate pair.
            const double w = (k2 == 0 || k2 == grid.n / 2) ? 1.0 : 2.0;
            const double mag2 = std::norm(f.coeff[static_cast<std::size_t>(k1) * ny + k2]);
            acc += w * std::pow(1.0 + xi1 * xi1 + xi2 * xi2, s) * mag2;
        }
    }
    // Parseval with the continuum (integral) normalization over [-L, L)^2.
    const double scale = 2.0 * grid.half_width / (static_cast<double>(grid.n) * grid.n);
    return scale * std::sqrt(acc);
}

double sobolev_norm(const ScalarField& rho, double s) { return sobolev_norm(to_spectral(rho), s); }

double l2_inner(const SpectralField& a, const SpectralField& b) {
    if (a.grid != b.grid) fail(ErrorKind::InvalidArgument, "field grids differ");
    const GridSpec& grid = a.grid;
    const std::uint32_t ny = a.ny();
    double acc = 0.0;
    for (std::uint32_t k1 = 0; k1 < grid.n; ++k1) {
        for (std::uint32_t k2 = 0; k2 < ny; ++k2) {
            const double w = (k2 == 0 || k2 == grid.n / 2) ? 1.0 : 2.0;
            const std::size_t idx = static_cast<std::size_t>(k1) * ny + k2;
            acc += w * (a.coeff[idx] * std::conj(b.coeff[idx])).real();
        }
    }
    const double scale = 2.0 * grid.half_width / (static_cast<double>(grid.n) * grid.n);
    return scale * scale * acc;
}

double c1_norm(const ScalarField& rho) {
    SpectralField rh = to_spectral(rho);
    ScalarField dx = to_physical(derivative(rh, 1));
    ScalarField dy = to_physical(derivative(rh, 2));
    double sup = 0.0, gsup = 0.0;
    for (std::size_t i = 0; i < rho.values.size(); ++i) {
        sup = std::max(sup, std::abs(rho.values[i]));
        gsup = std::max(gsup, std::hypot(dx.values[i], dy.values[i]));
    }
    return sup + gsup;
}

double divergence_max(const ScalarField& u1, const ScalarField& u2) {
    SpectralField d1 = derivative(to_spectral(u1), 1);
    SpectralField d2 = derivative(to_spectral(u2), 2);
    for (std::size_t i = 0; i < d1.coeff.size(); ++i) d1.coeff[i] += d2.coeff[i];
    return max_abs(to_physical(d1));
}

double eval_origin(const SpectralField& f) {
    // x = 0 sits at grid index (n/2, n/2); the inverse-DFT phase there is
    // (-1)^(k1+k2).
    const GridSpec& grid = f.grid;
    const std::uint32_t ny = f.ny();
    double acc = 0.0;
    for (std::uint32_t k1 = 0; k1 < grid.n; ++k1) {
        for (std::uint32_t k2 = 0; k2 < ny; ++k2) {
            const double w = (k2 == 0 || k2 == grid.n / 2) ? 1.0 : 2.0;
            const double sign = ((k1 + k2) & 1u) ? -1.0 : 1.0;
            acc += w * sign * f.coeff[static_cast<std::size_t>(k1) * ny + k2].real();
        }
    }
    return acc / (static_cast<double>(grid.n) * grid.n);
}

double origin_deformation_spectral(const SpectralField& rho) {
    SpectralField g = rho;
    for_each_mode(g, [&](std::complex<double>& c, double xi1, double xi2, int m1, int m2) {
        const double q = xi1 * xi1 + xi2 * xi2;
        if (q == 0.0 || is_nyquist(g.grid, m1, m2)) {
            c = 0.0;
            return;
        }
        // d_x1 of u1 = i xi1 * (xi1 xi2 / |xi|^2)
        c *= std::complex<double>(0.0, xi1 * xi1 * xi2 / q);
    });
    return eval_origin(g);
}

double origin_deformation_spectral(const ScalarField& rho) {
    return origin_deformation_spectral(to_spectral(rho));
}

void dealias(SpectralField& f) {
    const int cut = static_cast<int>(f.grid.n) / 3;
    for_each_mode(f, [&](std::complex<double>& c, double, double, int m1, int m2) {
        if (std::abs(m1) > cut || std::abs(m2) > cut) c = 0.0;
    });
}

void exp_filter(SpectralField& f, double strength) {
    if (strength <= 0.0) return;
    const double mmax = static_cast<double>(f.grid.n) / 2.0;
    for_each_mode(f, [&](std::complex<double>& c, double, double, int m1, int m2) {
        const double eta = std::hypot(static_cast<double>(m1), static_cast<double>(m2)) / mmax;
        c *= std::exp(-36.0 * strength * std::pow(eta, 36));
    });
}

void zero_mean(SpectralField& f) { f.coeff[0] = 0.0; }

double spectral_tail_fraction(const SpectralField& f) {
    const int n = static_cast<int>(f.grid.n);
    const int lo = (n * 3) / 10, hi = n / 3;  // shell just inside the 2/3 cutoff
    double tail = 0.0, all = 0.0;
    const std::uint32_t ny = f.ny();
    for (std::uint32_t k1 = 0; k1 < f.grid.n; ++k1) {
        const int m1 = f.grid.mode(k1);
        for (std::uint32_t k2 = 0; k2 < ny; ++k2) {
            const int mm = std::max(std::abs(m1), static_cast<int>(k2));
            const double a = std::abs(f.coeff[static_cast<std::size_t>(k1) * ny + k2]);
            all = std::max(all, a);
            if (mm >= lo && mm <= hi) tail = std::max(tail, a);
        }
    }
    return all == 0.0 ? 0.0 : tail / all;
}

}  // namespace ipm
