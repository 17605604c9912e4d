#pragma once

#include <complex>
#include <vector>

#include "grid.hpp"

namespace ipm {

// Half-plane spectral coefficients of a real field (r2c layout):
// coeff[m1_bin * (n/2+1) + m2] covers m2 in [0, n/2]; the m2 < 0 modes are
// implied by conjugate symmetry. Coefficients are unnormalized forward-DFT
// sums; the continuum Fourier coefficient of mode m is coeff/(n*n) up to a
// grid-offset phase that cancels in every diagonal multiplier and norm.
struct SpectralField {
    GridSpec grid;
    std::vector<std::complex<double>> coeff;

    SpectralField() = default;
    explicit SpectralField(const GridSpec& g)
        : grid(g), coeff(static_cast<std::size_t>(g.n) * (g.n / 2 + 1)) {}

    std::uint32_t ny() const { return grid.n / 2 + 1; }
    std::complex<double>& at(std::uint32_t k1, std::uint32_t k2) {
        return coeff[static_cast<std::size_t>(k1) * ny() + k2];
    }
    std::complex<double> at(std::uint32_t k1, std::uint32_t k2) const {
        return coeff[static_cast<std::size_t>(k1) * ny() + k2];
    }
};

// Deterministic FFTW-backed transforms (FFTW_ESTIMATE plans, cached per size).
SpectralField to_spectral(const ScalarField& f);
ScalarField to_physical(const SpectralField& s);

}  // namespace ipm
