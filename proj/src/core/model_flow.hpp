#pragma once

#include <string>
#include <vector>

#include "grid.hpp"
#include "profiles.hpp"
#include "quadrature.hpp"

namespace ipm {

// Piecewise-linear deformation history k(t) < 0 with trapezoid accumulated
// integral I(t) = int_0^t k and stretching factor D(t) = exp(-I(t)).
class DeformationSchedule {
  public:
    DeformationSchedule(std::vector<double> times, std::vector<double> k_values);

    double t_begin() const { return times_.front(); }
    double t_end() const { return times_.back(); }
    double k(double t) const;          // linear interpolation
    double integral(double t) const;   // I(t)
    double stretch(double t) const { return std::exp(-integral(t)); }
    double total_mass() const { return -integral(t_end()); }  // -int_0^T k

    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& k_values() const { return k_values_; }

    static DeformationSchedule constant(double k, double t_end, std::size_t samples = 33);

  private:
    std::vector<double> times_;
    std::vector<double> k_values_;
    std::vector<double> integral_;  // trapezoid prefix
};

// Phi(x) = (x1 e^I, x2 e^-I); area-preserving diagonal flow.
inline std::array<double, 2> flow_map(double x1, double x2, double I) {
    return {x1 * std::exp(I), x2 * std::exp(-I)};
}

// rho(x, t) = rho_in(Phi^{-1}(x)) sampled on the grid; exact solution of
// d_t rho + k(t)(x1, -x2).grad rho = 0.
ScalarField transport_exact(const Profile& rho_in, const DeformationSchedule& schedule,
                            double t, const GridSpec& grid);

// Profile of the transported density at time t (for quadrature callers).
Profile transport_profile(const Profile& rho_in, double I);

// k~(t) = (1/pi) int phi2 (phi2^2 - 3 phi1^2)/|Phi|^6 rho_in(y) dy, the
// origin deformation of the transported density by Lagrangian quadrature.
// Hypotheses: supp(rho_in) inside {|x2| > c |x1|}, c >= sqrt(10), x2 rho <= 0.
double deformation_under_flow(const SampledDensity& rho_in,
                              const DeformationSchedule& schedule, double t,
                              double cone_constant, double rel_tol = 1e-9);

struct CertCheck {
    std::string name;
    bool pass = false;
    double margin = 0.0;
};

struct CertReport {
    bool sign_persists = false;
    bool monotone = false;
    bool e7m_bound = false;
    std::vector<CertCheck> checks;
    std::vector<double> times;
    std::vector<double> k_tilde;

    bool all_pass() const { return sign_persists && monotone && e7m_bound; }
};

// Certifies the three conclusions of the persistence lemma on a sampled
// schedule: k~(t) < 0, k~ nondecreasing (finite-difference slope >= -1e-8),
// and k~(t) <= e^{-7M} k~(0). Hypothesis violations throw ErrorKind::Hypothesis.
CertReport verify_lemma23(const SampledDensity& rho_in, const DeformationSchedule& schedule,
                          double cone_constant, std::size_t time_samples = 33,
                          double rel_tol = 1e-9);

}  // namespace ipm
