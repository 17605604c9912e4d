#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "grid.hpp"
#include "quadrature.hpp"

namespace ipm {

// C-infinity step from the exp(-1/s) mollifier ratio: 0 for u <= 0, 1 for
// u >= 1, with closed-form first and second derivatives.
struct SmoothStep {
    static double value(double u);
    static double d1(double u);
    static double d2(double u);
};

// ==1 for r <= r0, ==0 for r >= r1, monotone nonincreasing in between.
double smooth_cutoff(double r, double r0, double r1);
double smooth_cutoff_d1(double r, double r0, double r1);
double smooth_cutoff_d2(double r, double r0, double r1);

// Closed-form density profile: point evaluation plus support metadata; the
// hole family also carries analytic gradient/Hessian for the quadrature
// norm oracle.
struct Profile {
    Fn2 value;
    std::function<std::array<double, 2>(double, double)> grad;   // may be empty
    std::function<std::array<double, 3>(double, double)> hess;   // d11,d12,d22
    double support_radius = 0.0;
    double vanish_radius = 0.0;

    SampledDensity density() const {
        return SampledDensity{value, support_radius, vanish_radius};
    }
};

ScalarField sample(const Profile& p, const GridSpec& grid);

// f(x) = x2 * smooth_cutoff(|x|, 1/2, 1): equals x2 on B_{1/2}, supported in
// B_1, even in x1 / odd in x2.
Profile hole_base();

struct HoleProfileSpec {
    std::uint32_t layers = 0;           // K
    std::vector<double> lambda;         // lambda_1..lambda_K
    double amplitude = 0.0;             // a = 1/H_K

    double delta0() const { return 0.5 / lambda.back(); }
};

// lambda_i = lambda1 * ratio^(i-1); requires lambda1 > 1 and ratio > 2.
HoleProfileSpec make_hole_spec(std::uint32_t layers, double lambda1, double ratio);

// rho_in = a sum_i f(lambda_i x) / (i lambda_i); equals x2 on B_{1/(2 lambda_K)}.
Profile hole_profile(const HoleProfileSpec& spec);
ScalarField build_hole_profile(const HoleProfileSpec& spec, const GridSpec& grid);

// Quadrature H2 norm of the hole profile (works at scales no grid resolves):
// expands ||sum||^2 over layer pairs, each integrated from the closed form.
double hole_h2_norm(const HoleProfileSpec& spec, double rel_tol = 1e-9);
double base_h2_norm(double rel_tol = 1e-9);          // ||hole_base||_{H2}

// Cone layer: -x2 * radial bump(annulus) * angular cutoff, supported
// strictly inside {|x2| >= 1.05*cone_constant*|x1|}, x2*f <= 0, symmetric.
Profile cone_layer(double r_in, double r_out, double cone_constant);
ScalarField build_cone_layer(const GridSpec& grid, double r_in, double r_out,
                             double cone_constant);

struct ConeStackSpec {
    std::uint32_t layers = 0;       // K
    double delta0 = 0.0;
    double cone_constant = 0.0;     // fraktur C
    double r_in = 1.02;
    double r_out = 1.98;
};

// rho_{K,delta0} = delta0 sum_i f(2^i x) / (i 2^i), disjoint layer supports.
Profile cone_stack(const ConeStackSpec& spec);
ScalarField build_cone_stack(const ConeStackSpec& spec, const GridSpec& grid);

struct OscillatorySpec {
    std::uint32_t frequency = 0;    // N >= 2
    double theta0 = 0.0;
    double l2_target = 0.0;         // ||f||_L2 of the base bump
};

// f(Nx) sin(N^{1+1/10} x1 + theta0) / N^{1+1/5} with f an even annular bump
// on B_1 \ B_{1/10} normalized to ||f||_L2 = l2_target.
Profile oscillatory_layer(const OscillatorySpec& spec);
ScalarField build_oscillatory_layer(const OscillatorySpec& spec, const GridSpec& grid);

double harmonic_number(std::uint32_t k);

}  // namespace ipm
