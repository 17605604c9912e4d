#include "scaling.hpp"

#include <cmath>

namespace ipm {

namespace {
void check_inputs(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        fail(ErrorKind::InvalidArgument, "scaling fit needs matching x/y with at least two points");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            fail(ErrorKind::InvalidArgument, "scaling fit needs strictly positive samples");
}
}  // namespace

ScalingFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
    check_inputs(x, y);
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double dn = static_cast<double>(n);
    const double denom = dn * sxx - sx * sx;
    ScalingFit fit;
    fit.x = x;
    fit.y = y;
    fit.exponent = (dn * sxy - sx * sy) / denom;
    const double logc = (sy - fit.exponent * sx) / dn;
    fit.prefactor = std::exp(logc);
    double rss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = std::log(y[i]) - (logc + fit.exponent * std::log(x[i]));
        rss += r * r;
    }
    fit.residual = std::sqrt(rss / dn);
    return fit;
}

ScalingFit fit_fixed_exponent(const std::vector<double>& x, const std::vector<double>& y,
                              double exponent, const std::vector<double>& extra) {
    check_inputs(x, y);
    if (!extra.empty() && extra.size() != x.size())
        fail(ErrorKind::InvalidArgument, "fixed-exponent fit: extra factor size mismatch");
    const std::size_t n = x.size();
    double acc = 0;
    auto shape = [&](std::size_t i) {
        const double e = extra.empty() ? 1.0 : extra[i];
        return std::log(e) + exponent * std::log(x[i]);
    };
    for (std::size_t i = 0; i < n; ++i) acc += std::log(y[i]) - shape(i);
    const double logc = acc / static_cast<double>(n);
    ScalingFit fit;
    fit.x = x;
    fit.y = y;
    fit.exponent = exponent;
    fit.prefactor = std::exp(logc);
    double rss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = std::log(y[i]) - (logc + shape(i));
        rss += r * r;
    }
    fit.residual = std::sqrt(rss / static_cast<double>(n));
    return fit;
}

}  // namespace ipm
