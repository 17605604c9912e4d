#include "model_flow.hpp"

#include <algorithm>
#include <cmath>

namespace ipm {

DeformationSchedule::DeformationSchedule(std::vector<double> times, std::vector<double> k_values)
    : times_(std::move(times)), k_values_(std::move(k_values)) {
    if (times_.size() < 2 || times_.size() != k_values_.size())
        fail(ErrorKind::InvalidArgument, "schedule needs matching times/k with at least two samples");
    if (times_.front() != 0.0)
        fail(ErrorKind::InvalidArgument, "schedule must start at t = 0");
    for (std::size_t i = 0; i + 1 < times_.size(); ++i)
        if (!(times_[i + 1] > times_[i]))
            fail(ErrorKind::InvalidArgument, "schedule times must be strictly increasing");
    for (double k : k_values_)
        if (!(k < 0.0))
            fail(ErrorKind::Hypothesis, "schedule requires k(t) < 0 at every sample");
    integral_.resize(times_.size(), 0.0);
    for (std::size_t i = 1; i < times_.size(); ++i)
        integral_[i] = integral_[i - 1] +
                       0.5 * (k_values_[i] + k_values_[i - 1]) * (times_[i] - times_[i - 1]);
}

double DeformationSchedule::k(double t) const {
    if (t < t_begin() - 1e-12 || t > t_end() + 1e-12)
        fail(ErrorKind::InvalidArgument, "schedule queried outside its time range");
    t = std::clamp(t, t_begin(), t_end());
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    std::size_t hi = std::min<std::size_t>(times_.size() - 1,
                                           static_cast<std::size_t>(it - times_.begin()));
    if (hi == 0) hi = 1;
    const std::size_t lo = hi - 1;
    const double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
    return k_values_[lo] + w * (k_values_[hi] - k_values_[lo]);
}

double DeformationSchedule::integral(double t) const {
    if (t < t_begin() - 1e-12 || t > t_end() + 1e-12)
        fail(ErrorKind::InvalidArgument, "schedule queried outside its time range");
    t = std::clamp(t, t_begin(), t_end());
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    std::size_t hi = std::min<std::size_t>(times_.size() - 1,
                                           static_cast<std::size_t>(it - times_.begin()));
    if (hi == 0) hi = 1;
    const std::size_t lo = hi - 1;
    const double kt = k(t);
    return integral_[lo] + 0.5 * (k_values_[lo] + kt) * (t - times_[lo]);
}

DeformationSchedule DeformationSchedule::constant(double k, double t_end, std::size_t samples) {
    std::vector<double> ts(samples), ks(samples, k);
    for (std::size_t i = 0; i < samples; ++i)
        ts[i] = t_end * static_cast<double>(i) / static_cast<double>(samples - 1);
    return DeformationSchedule(std::move(ts), std::move(ks));
}

ScalarField transport_exact(const Profile& rho_in, const DeformationSchedule& schedule,
                            double t, const GridSpec& grid) {
    const double I = schedule.integral(t);
    return sample(transport_profile(rho_in, I), grid);
}

Profile transport_profile(const Profile& rho_in, double I) {
    Profile p;
    const double e = std::exp(I);
    // Phi^{-1}(x) = (x1 e^{-I}, x2 e^{I}); with k < 0 the support stretches
    // along x2 by e^{-I} >= 1.
    p.support_radius = rho_in.support_radius * std::max(e, 1.0 / e);
    p.vanish_radius = rho_in.vanish_radius * std::min(e, 1.0 / e);
    Fn2 base = rho_in.value;
    p.value = [base, e](double x1, double x2) { return base(x1 / e, x2 * e); };
    return p;
}

namespace {

void check_cone_hypotheses(const SampledDensity& rho_in, double cone_constant) {
    if (!(cone_constant >= std::sqrt(10.0)))
        fail(ErrorKind::Hypothesis,
             "deformation_under_flow requires cone_constant >= sqrt(10)");
    if (!(rho_in.vanish_radius > 0.0))
        fail(ErrorKind::Hypothesis, "deformation_under_flow: density must vanish near the origin");
    // Spot-check the support cone and the sign condition x2 rho <= 0 on a
    // deterministic sample fan. Tolerances are relative so interpolated grid
    // fields with edge overshoot still qualify.
    const double R = rho_in.support_radius;
    double vmax = 0.0, sign_defect = 0.0, cone_defect = 0.0;
    for (int i = 0; i < 128; ++i) {
        for (int j = 1; j < 48; ++j) {
            const double a = 2.0 * M_PI * (static_cast<double>(i) + 0.5) / 128.0;
            const double r = R * static_cast<double>(j) / 48.0;
            const double x1 = r * std::cos(a), x2 = r * std::sin(a);
            const double v = rho_in.eval(x1, x2);
            vmax = std::max(vmax, std::abs(v));
            sign_defect = std::max(sign_defect, x2 * v);
            if (std::abs(x2) <= cone_constant * std::abs(x1))
                cone_defect = std::max(cone_defect, std::abs(v));
        }
    }
    if (sign_defect > 1e-9 * std::max(vmax, 1e-300))
        fail(ErrorKind::Hypothesis, "deformation_under_flow requires x2 rho <= 0");
    if (cone_defect > 1e-9 * std::max(vmax, 1e-300))
        fail(ErrorKind::Hypothesis,
             "deformation_under_flow: support leaves the cone {|x2| > c |x1|}");
}

}  // namespace

double deformation_under_flow(const SampledDensity& rho_in, const DeformationSchedule& schedule,
                              double t, double cone_constant, double rel_tol) {
    check_cone_hypotheses(rho_in, cone_constant);
    const double I = schedule.integral(t);
    const double e = std::exp(I);
    const double R = rho_in.support_radius;
    const double hole = rho_in.vanish_radius;
    Fn2 integrand = [&](double y1, double y2) {
        const double q0 = y1 * y1 + y2 * y2;
        if (q0 < 0.25 * hole * hole || q0 > R * R) return 0.0;
        const double v = rho_in.eval(y1, y2);
        if (v == 0.0) return 0.0;
        const double p1 = y1 * e, p2 = y2 / e;
        const double q = p1 * p1 + p2 * p2;
        return p2 * (p2 * p2 - 3.0 * p1 * p1) / (q * q * q) * v;
    };
    QuadResult r = integrate2(integrand, -R, R, -R, R, 0.0, rel_tol);
    return r.value / M_PI;
}

CertReport verify_lemma23(const SampledDensity& rho_in, const DeformationSchedule& schedule,
                          double cone_constant, std::size_t time_samples, double rel_tol) {
    check_cone_hypotheses(rho_in, cone_constant);
    const double T = schedule.t_end();
    const double M = schedule.total_mass();
    if (!(M > 0.0)) fail(ErrorKind::Hypothesis, "verify_lemma23 requires 0 < -int k <= M");

    CertReport rep;
    rep.times.resize(time_samples);
    rep.k_tilde.resize(time_samples);
    for (std::size_t i = 0; i < time_samples; ++i) {
        rep.times[i] = T * static_cast<double>(i) / static_cast<double>(time_samples - 1);
        rep.k_tilde[i] =
            deformation_under_flow(rho_in, schedule, rep.times[i], cone_constant, rel_tol);
    }

    const double k0 = rep.k_tilde.front();
    double worst_sign = 0.0;     // max k~ (must stay < 0)
    double worst_slope = 1e300;  // min finite-difference slope
    double worst_bound = 1e300;  // min (e^{-7M} k0 - k~)
    for (std::size_t i = 0; i < time_samples; ++i) {
        worst_sign = std::max(worst_sign, rep.k_tilde[i]);
        worst_bound = std::min(worst_bound, std::exp(-7.0 * M) * k0 - rep.k_tilde[i]);
        if (i > 0) {
            const double slope = (rep.k_tilde[i] - rep.k_tilde[i - 1]) /
                                 (rep.times[i] - rep.times[i - 1]);
            worst_slope = std::min(worst_slope, slope);
        }
    }
    rep.sign_persists = worst_sign < 0.0;
    rep.monotone = worst_slope >= -1e-8;
    rep.e7m_bound = worst_bound >= 0.0;
    rep.checks = {
        {"sign_persists", rep.sign_persists, -worst_sign},
        {"monotone", rep.monotone, worst_slope},
        {"e7M_bound", rep.e7m_bound, worst_bound},
    };
    return rep;
}

}  // namespace ipm
