#pragma once

#include "fft.hpp"
#include "grid.hpp"

namespace ipm {

// Fourier-multiplier operators for the IPM velocity law
//   u = (u1, u2) = -(R2, -R1) R1 rho,   R_j ~ i xi_j / |xi|,
// plus the Sobolev/C1 diagnostics. All multipliers send the xi = 0 mode to
// zero; densities are implicitly projected to mean zero.

// R_axis: multiply mode xi by i*xi_axis/|xi|. Unpaired Nyquist lines are
// zeroed (an odd multiplier cannot keep them conjugate-symmetric).
SpectralField riesz(const SpectralField& f, int axis);

// Spectral partial derivative along axis (i*xi_axis), Nyquist zeroed.
SpectralField derivative(const SpectralField& f, int axis);

// u1 = -R2 R1 rho (multiplier  xi1*xi2/|xi|^2),
// u2 =  R1 R1 rho (multiplier -xi1^2 /|xi|^2); divergence-free by the
// exact multiplier identity.
void velocity_spectral(const SpectralField& rho, SpectralField& u1, SpectralField& u2);
VelocityField velocity(const ScalarField& rho);

// R1^2 rho, the anisotropic partial-dissipation operator of the stable
// equation: <dissipation(rho), rho> = -|| (-Lap)^{-1/2} d_x1 rho ||_L2^2 <= 0.
ScalarField dissipation(const ScalarField& rho);

// Continuum-normalized norms (resolution-independent for resolved fields).
double sobolev_norm(const SpectralField& f, double s);
double sobolev_norm(const ScalarField& rho, double s);
double l2_inner(const SpectralField& a, const SpectralField& b);

// ||rho||_inf + ||grad rho||_inf with spectral gradient.
double c1_norm(const ScalarField& rho);

// Max modulus of the spectral divergence of (u1, u2).
double divergence_max(const ScalarField& u1, const ScalarField& u2);

// Field value at the origin node (x = 0 lies on the grid at index n/2).
double eval_origin(const SpectralField& f);

// k = d_x1 u1 [rho] (x=0) via multipliers; the origin-deformation diagnostic.
double origin_deformation_spectral(const SpectralField& rho);
double origin_deformation_spectral(const ScalarField& rho);

// 2/3-rule dealiasing: zero modes with max(|m1|,|m2|) > n/3.
void dealias(SpectralField& f);

// High-order exponential low-pass: multiply by exp(-36*strength*(|m|/(n/2))^36).
void exp_filter(SpectralField& f, double strength);

void zero_mean(SpectralField& f);

// Max |coeff| over the shell just below the dealias cutoff relative to the
// overall max; the resolvability indicator used by the solver's abort check.
double spectral_tail_fraction(const SpectralField& f);

}  // namespace ipm
