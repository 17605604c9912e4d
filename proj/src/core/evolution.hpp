#pragma once

#include <functional>
#include <optional>

#include "fft.hpp"
#include "grid.hpp"
#include "model_flow.hpp"
#include "spectral.hpp"

namespace ipm {

struct SolverConfig {
    double dt = 0.0;    // fixed step; 0 selects CFL-adaptive stepping
    double cfl = 0.4;
    bool dealias = true;
    double filter_strength = 0.0;   // exponential spectral filter, 0 = off
    bool stable_mode = false;       // evolve the perturbation of -x2
    bool self_advection = true;     // off reduces the forced system to the exact model
    std::optional<DeformationSchedule> forcing;  // extra k(t)(x1,-x2).grad term
};

struct TraceRow {
    double t = 0, k = 0, M = 0, H2 = 0, H3 = 0, C1 = 0, S_inf = 0, S_sup = 0;
};

struct NormTrace {
    std::vector<TraceRow> rows;
    double support_threshold_rel = 1e-12;
    // Quadrature cross-check of k where the density vanishes near the origin
    // (NaN when it does not); not part of the CSV schema.
    std::vector<double> k_quad;
};

// Single evolved field, kept spectrally. In stable mode the field is the
// perturbation rho_pert = rho + x2; the background -x2 itself is never on
// the grid.
struct SolverState {
    SpectralField rho_hat;
    double time = 0.0;
    SolverConfig config;
    bool initial_symmetric = false;
    double initial_tail = 0.0;

    ScalarField field() const { return to_physical(rho_hat); }
};

SolverState make_state(const ScalarField& rho0, const SolverConfig& config);

// One RK4 step of d_t rho = -u[rho].grad rho (- k(t)(x1,-x2).grad rho when
// forcing is set) (+ u2[rho] in stable mode), dealiased products.
void step(SolverState& state, double dt);

// CFL 0.4 against max(|u| + |k(t)| max(|x1|,|x2|)); returns config.dt if fixed.
double suggest_dt(const SolverState& state);

// (S_inf, S_sup): radius of the smallest origin disk containing every
// above-threshold node, and of the largest one containing none.
std::pair<double, double> support_radii(const ScalarField& rho, double threshold);

struct RunOptions {
    double T = 0.0;
    std::size_t outputs = 32;
    bool quad_k = false;
    std::function<void(double, const ScalarField&)> on_output;  // optional
};

NormTrace run(SolverState& state, const RunOptions& opts);

// Coupled interior/exterior gluing pair. The exterior is evolved in
// perturbation form P = rho_ext + x2 with right-hand side u2[I + P] (the
// expansion consistent with the exterior equation; see README); both fields
// are advected by u[I + P]. Their sum solves stable IPM exactly.
struct CoupledState {
    SpectralField inter_hat;
    SpectralField ext_hat;
    double time = 0.0;
    SolverConfig config;
    double initial_tail = 0.0;
};

CoupledState make_coupled_state(const ScalarField& interior0, const ScalarField& exterior_pert0,
                                const SolverConfig& config);
void step_coupled(CoupledState& state, double dt);
double suggest_dt(const CoupledState& state);

// Trace diagnostics are taken on the sum I + P except the support columns:
// S_inf tracks the interior, S_sup the exterior.
NormTrace run_coupled(CoupledState& state, const RunOptions& opts,
                      const std::function<void(double, const ScalarField&, const ScalarField&)>&
                          on_output = nullptr);

}  // namespace ipm
