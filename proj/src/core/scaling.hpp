#pragma once

#include <vector>

#include "common.hpp"

namespace ipm {

// Log-log least-squares power-law fit y ~ C x^p. Residual is the RMS
// deviation in log space.
struct ScalingFit {
    std::vector<double> x;
    std::vector<double> y;
    double exponent = 0.0;
    double prefactor = 0.0;
    double residual = 0.0;
};

ScalingFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

// Fit only the prefactor of y ~ C * extra(x) * x^p with the exponent pinned;
// `extra` carries shape factors like ln(A).
ScalingFit fit_fixed_exponent(const std::vector<double>& x, const std::vector<double>& y,
                              double exponent, const std::vector<double>& extra);

}  // namespace ipm
