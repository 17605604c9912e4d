#pragma once

#include <array>
#include <functional>

#include "grid.hpp"

namespace ipm {

// Adaptive Gauss-Kronrod 7/15 quadrature. `error` is the accumulated
// Kronrod-Gauss discrepancy over accepted panels.
struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
    std::size_t evals = 0;
};

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

QuadResult integrate(const Fn1& f, double a, double b, double abs_tol, double rel_tol);

// Iterated adaptive quadrature over [ax,bx] x [ay,by] (outer x, inner y).
QuadResult integrate2(const Fn2& f, double ax, double bx, double ay, double by,
                      double abs_tol, double rel_tol);

// A density known through point evaluation: closed form or an interpolated
// grid field. `support_radius` bounds supp(rho) inside B_support_radius(0);
// `vanish_radius` > 0 asserts rho == 0 on B_vanish_radius(0).
struct SampledDensity {
    Fn2 eval;
    double support_radius = 0.0;
    double vanish_radius = 0.0;
};

// Wraps a grid field with periodic bicubic (Catmull-Rom) interpolation and
// measured support radii.
SampledDensity sample_field(const ScalarField& f);

struct PvVelocity {
    double u1 = 0.0;
    double u2 = 0.0;
    double residual = 0.0;  // Richardson extrapolation residual
};

// Principal-value convolution velocity, Eq-(4)/(5) kernels:
//   u(x) = PV(H * rho)(x) - (0, rho(x)/2),
//   H1 = -(1/pi) h1 h2/|h|^4,  H2 = (1/2pi)(h1^2-h2^2)/|h|^4.
// Symmetric excision of B_eta(x) at two radii with Richardson extrapolation;
// throws ErrorKind::Numeric when the extrapolation residual exceeds tol.
PvVelocity pv_velocity_at(const SampledDensity& rho, double x1, double x2,
                          double tol = 1e-6);

// (1/pi) int y2 (y2^2 - 3 y1^2)/|y|^6 rho(y) dy  -- the origin value of
// d_x1 u1. Requires rho to vanish on a neighborhood of the origin.
double origin_deformation(const SampledDensity& rho, double rel_tol = 1e-8);

// Polar form as displayed: (1/pi) int -sin(3a)/r^2 rho(r,a) dr da (the r'
// Jacobian is already absorbed into the 1/r^2).
double origin_deformation_polar(const std::function<double(double, double)>& rho_polar,
                                double r_min, double r_max, double rel_tol = 1e-8);

}  // namespace ipm
