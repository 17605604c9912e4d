#include "evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quadrature.hpp"

namespace ipm {

namespace {

void apply_velocity_multipliers(const SpectralField& rho, SpectralField& u1, SpectralField& u2) {
    velocity_spectral(rho, u1, u2);
}

void add_scaled(std::vector<std::complex<double>>& y, double a,
                const std::vector<std::complex<double>>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

void check_finite(const SpectralField& f, double t) {
    for (const auto& c : f.coeff)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            fail(ErrorKind::Numeric, "solver state became non-finite at t = " + std::to_string(t));
}

void check_tail(const SpectralField& f, double initial_tail, double t) {
    const double tail = spectral_tail_fraction(f);
    if (tail > std::max(1e-2, 20.0 * initial_tail))
        fail(ErrorKind::Numeric,
             "spectral tail blew past the resolvability threshold at t = " + std::to_string(t) +
                 "; refusing to filter through it");
}

// Nonlinear advection term N = -(u.grad rho) - kt*(x1 d1 - x2 d2) in
// physical space, returned spectrally (dealiased, mean-zero).
SpectralField advection_rhs(const GridSpec& grid, const SpectralField& rho_hat, double kt,
                            bool do_dealias, bool self_advection) {
    SpectralField rho_d = rho_hat;
    zero_mean(rho_d);
    if (do_dealias) dealias(rho_d);

    ScalarField u1, u2;
    if (self_advection) {
        SpectralField u1h, u2h;
        apply_velocity_multipliers(rho_d, u1h, u2h);
        u1 = to_physical(u1h);
        u2 = to_physical(u2h);
    } else {
        u1 = ScalarField(grid);
        u2 = ScalarField(grid);
    }
    ScalarField d1 = to_physical(derivative(rho_d, 1));
    ScalarField d2 = to_physical(derivative(rho_d, 2));

    ScalarField n(grid);
    for (std::uint32_t i1 = 0; i1 < grid.n; ++i1) {
        const double x1 = grid.node(i1);
        for (std::uint32_t i2 = 0; i2 < grid.n; ++i2) {
            const double x2 = grid.node(i2);
            double adv = u1.at(i1, i2) * d1.at(i1, i2) + u2.at(i1, i2) * d2.at(i1, i2);
            if (kt != 0.0) adv += kt * (x1 * d1.at(i1, i2) - x2 * d2.at(i1, i2));
            n.at(i1, i2) = -adv;
        }
    }
    SpectralField nh = to_spectral(n);
    if (do_dealias) dealias(nh);
    zero_mean(nh);
    return nh;
}

// u2[rho] as a multiplier on the (non-dealiased) full spectrum: the linear
// partial-dissipation term of the stable equation.
void add_dissipation(SpectralField& rhs, const SpectralField& rho_hat) {
    const GridSpec& g = rho_hat.grid;
    const std::uint32_t ny = rho_hat.ny();
    for (std::uint32_t k1 = 0; k1 < g.n; ++k1) {
        const double xi1 = g.wavenumber(g.mode(k1));
        for (std::uint32_t k2 = 0; k2 < ny; ++k2) {
            const double xi2 = g.wavenumber(static_cast<int>(k2));
            const double q = xi1 * xi1 + xi2 * xi2;
            if (q == 0.0) continue;
            rhs.coeff[static_cast<std::size_t>(k1) * ny + k2] +=
                (-xi1 * xi1 / q) * rho_hat.coeff[static_cast<std::size_t>(k1) * ny + k2];
        }
    }
}

double max_speed(const SpectralField& rho_hat, bool do_dealias) {
    SpectralField rho_d = rho_hat;
    zero_mean(rho_d);
    if (do_dealias) dealias(rho_d);
    SpectralField u1h, u2h;
    apply_velocity_multipliers(rho_d, u1h, u2h);
    ScalarField u1 = to_physical(u1h);
    ScalarField u2 = to_physical(u2h);
    double v = 0.0;
    for (std::size_t i = 0; i < u1.values.size(); ++i)
        v = std::max(v, std::hypot(u1.values[i], u2.values[i]));
    return v;
}

double cfl_dt(const GridSpec& grid, double umax, double kt, double cfl) {
    const double speed = umax + std::abs(kt) * grid.half_width;
    if (speed <= 1e-14) return 0.25;  // quiescent field; any modest step works
    return cfl * grid.spacing() / speed;
}

}  // namespace

SolverState make_state(const ScalarField& rho0, const SolverConfig& config) {
    if (!all_finite(rho0)) fail(ErrorKind::InvalidArgument, "initial field has non-finite values");
    if (config.dt < 0.0 || config.cfl <= 0.0 || config.filter_strength < 0.0)
        fail(ErrorKind::InvalidArgument, "solver config out of range");
    SolverState s;
    s.rho_hat = to_spectral(rho0);
    zero_mean(s.rho_hat);
    s.config = config;
    s.time = 0.0;
    s.initial_symmetric = symmetry_defect(rho0) <= 1e-10 * std::max(1.0, max_abs(rho0));
    s.initial_tail = spectral_tail_fraction(s.rho_hat);
    return s;
}

void step(SolverState& state, double dt) {
    if (!(dt > 0.0)) fail(ErrorKind::InvalidArgument, "step requires dt > 0");
    const GridSpec& grid = state.rho_hat.grid;
    const auto& cfg = state.config;
    const bool stable = cfg.stable_mode;
    auto kt = [&](double t) {
        if (!cfg.forcing) return 0.0;
        if (t < cfg.forcing->t_begin() - 1e-12 || t > cfg.forcing->t_end() + 1e-12)
            fail(ErrorKind::InvalidArgument, "forcing schedule does not cover the step");
        return cfg.forcing->k(t);
    };
    auto rhs = [&](const SpectralField& y, double t) {
        SpectralField r = advection_rhs(grid, y, kt(t), cfg.dealias, cfg.self_advection);
        if (stable) add_dissipation(r, y);
        return r;
    };

    const double t = state.time;
    SpectralField y = state.rho_hat;
    SpectralField k1 = rhs(y, t);

    SpectralField y2 = y;
    add_scaled(y2.coeff, 0.5 * dt, k1.coeff);
    SpectralField k2 = rhs(y2, t + 0.5 * dt);

    SpectralField y3 = y;
    add_scaled(y3.coeff, 0.5 * dt, k2.coeff);
    SpectralField k3 = rhs(y3, t + 0.5 * dt);

    SpectralField y4 = y;
    add_scaled(y4.coeff, dt, k3.coeff);
    SpectralField k4 = rhs(y4, t + dt);

    for (std::size_t i = 0; i < y.coeff.size(); ++i)
        state.rho_hat.coeff[i] +=
            dt / 6.0 * (k1.coeff[i] + 2.0 * k2.coeff[i] + 2.0 * k3.coeff[i] + k4.coeff[i]);
    if (cfg.filter_strength > 0.0) exp_filter(state.rho_hat, cfg.filter_strength);
    state.time = t + dt;

    check_finite(state.rho_hat, state.time);
    check_tail(state.rho_hat, state.initial_tail, state.time);
}

double suggest_dt(const SolverState& state) {
    if (state.config.dt > 0.0) return state.config.dt;
    const double kt =
        state.config.forcing ? std::abs(state.config.forcing->k(
                                   std::clamp(state.time, state.config.forcing->t_begin(),
                                              state.config.forcing->t_end())))
                             : 0.0;
    const double umax = state.config.self_advection
                            ? max_speed(state.rho_hat, state.config.dealias)
                            : 0.0;
    return cfl_dt(state.rho_hat.grid, umax, kt, state.config.cfl);
}

std::pair<double, double> support_radii(const ScalarField& rho, double threshold) {
    if (!(threshold > 0.0)) fail(ErrorKind::InvalidArgument, "support_radii threshold must be > 0");
    const GridSpec& g = rho.grid;
    double rmax = 0.0;
    double rmin = g.half_width;
    bool any = false;
    for (std::uint32_t i1 = 0; i1 < g.n; ++i1) {
        const double x1 = g.node(i1);
        for (std::uint32_t i2 = 0; i2 < g.n; ++i2) {
            if (std::abs(rho.at(i1, i2)) <= threshold) continue;
            const double r = std::hypot(x1, g.node(i2));
            rmax = std::max(rmax, r);
            rmin = any ? std::min(rmin, r) : r;
            any = true;
        }
    }
    if (!any) return {0.0, g.half_width};
    return {rmax, rmin};
}

namespace {

struct TraceAccumulator {
    NormTrace trace;
    bool check_symmetry = false;

    void record(double t, const SpectralField& sum_hat, const ScalarField& sum,
                const ScalarField& inf_field, const ScalarField& sup_field, bool quad_k) {
        TraceRow row;
        row.t = t;
        row.k = origin_deformation_spectral(sum_hat);
        if (!trace.rows.empty()) {
            const TraceRow& prev = trace.rows.back();
            row.M = prev.M - 0.5 * (row.k + prev.k) * (row.t - prev.t);
        }
        row.H2 = sobolev_norm(sum_hat, 2.0);
        row.H3 = sobolev_norm(sum_hat, 3.0);
        row.C1 = c1_norm(sum);
        const double thr_inf = trace.support_threshold_rel * std::max(1e-300, max_abs(inf_field));
        const double thr_sup = trace.support_threshold_rel * std::max(1e-300, max_abs(sup_field));
        row.S_inf = support_radii(inf_field, thr_inf).first;
        row.S_sup = support_radii(sup_field, thr_sup).second;
        trace.rows.push_back(row);

        if (quad_k) {
            SampledDensity d = sample_field(sum);
            trace.k_quad.push_back(d.vanish_radius > 0.02
                                       ? origin_deformation(d, 1e-5)
                                       : std::numeric_limits<double>::quiet_NaN());
        }
        if (check_symmetry) {
            const double defect = symmetry_defect(sum);
            if (defect > 1e-8 * std::max(1.0, max_abs(sum)))
                fail(ErrorKind::Numeric,
                     "symmetric class broken during evolution (defect " + std::to_string(defect) + ")");
        }
    }
};

}  // namespace

NormTrace run(SolverState& state, const RunOptions& opts) {
    if (opts.T < 0.0) fail(ErrorKind::InvalidArgument, "run requires T >= 0");
    TraceAccumulator acc;
    acc.check_symmetry = state.initial_symmetric;

    auto record = [&](double t) {
        ScalarField f = state.field();
        acc.record(t, state.rho_hat, f, f, f, opts.quad_k);
        if (opts.on_output) opts.on_output(t, f);
    };
    record(state.time);
    if (opts.T == 0.0) return acc.trace;

    const double t_final = state.time + opts.T;
    const std::size_t outputs = std::max<std::size_t>(opts.outputs, 1);
    const double dt_out = opts.T / static_cast<double>(outputs);
    const double t0 = acc.trace.rows.front().t;
    for (std::size_t j = 1; j <= outputs; ++j) {
        const double t_next = std::min(t_final, t0 + dt_out * static_cast<double>(j));
        while (state.time < t_next - 1e-12) {
            const double dt = std::min(suggest_dt(state), t_next - state.time);
            step(state, dt);
        }
        record(state.time);
        if (state.time >= t_final - 1e-12) break;
    }
    return acc.trace;
}

CoupledState make_coupled_state(const ScalarField& interior0, const ScalarField& exterior_pert0,
                                const SolverConfig& config) {
    if (interior0.grid != exterior_pert0.grid)
        fail(ErrorKind::InvalidArgument, "coupled fields must share one grid");
    CoupledState s;
    s.inter_hat = to_spectral(interior0);
    s.ext_hat = to_spectral(exterior_pert0);
    zero_mean(s.inter_hat);
    zero_mean(s.ext_hat);
    s.config = config;
    SpectralField sum = s.inter_hat;
    add_scaled(sum.coeff, 1.0, s.ext_hat.coeff);
    s.initial_tail = spectral_tail_fraction(sum);
    return s;
}

namespace {

// RHS of the coupled pair: both fields advected by u[I + P]; the exterior
// perturbation additionally feels u2[I + P].
void coupled_rhs(const CoupledState& s, const SpectralField& ih, const SpectralField& ph,
                 SpectralField& ri, SpectralField& rp) {
    const GridSpec& grid = ih.grid;
    const bool do_dealias = s.config.dealias;

    SpectralField sum = ih;
    add_scaled(sum.coeff, 1.0, ph.coeff);
    SpectralField sum_d = sum;
    zero_mean(sum_d);
    if (do_dealias) dealias(sum_d);

    SpectralField u1h, u2h;
    apply_velocity_multipliers(sum_d, u1h, u2h);
    ScalarField u1 = to_physical(u1h);
    ScalarField u2 = to_physical(u2h);

    auto advect = [&](const SpectralField& fh) {
        SpectralField fd = fh;
        if (do_dealias) dealias(fd);
        ScalarField d1 = to_physical(derivative(fd, 1));
        ScalarField d2 = to_physical(derivative(fd, 2));
        ScalarField n(grid);
        for (std::size_t i = 0; i < n.values.size(); ++i)
            n.values[i] = -(u1.values[i] * d1.values[i] + u2.values[i] * d2.values[i]);
        SpectralField nh = to_spectral(n);
        if (do_dealias) dealias(nh);
        zero_mean(nh);
        return nh;
    };
    ri = advect(ih);
    rp = advect(ph);
    add_dissipation(rp, sum);
}

}  // namespace

void step_coupled(CoupledState& state, double dt) {
    if (!(dt > 0.0)) fail(ErrorKind::InvalidArgument, "step requires dt > 0");
    SpectralField i0 = state.inter_hat, p0 = state.ext_hat;
    SpectralField ki[4], kp[4];
    coupled_rhs(state, i0, p0, ki[0], kp[0]);

    SpectralField it = i0, pt = p0;
    add_scaled(it.coeff, 0.5 * dt, ki[0].coeff);
    add_scaled(pt.coeff, 0.5 * dt, kp[0].coeff);
    coupled_rhs(state, it, pt, ki[1], kp[1]);

    it = i0;
    pt = p0;
    add_scaled(it.coeff, 0.5 * dt, ki[1].coeff);
    add_scaled(pt.coeff, 0.5 * dt, kp[1].coeff);
    coupled_rhs(state, it, pt, ki[2], kp[2]);

    it = i0;
    pt = p0;
    add_scaled(it.coeff, dt, ki[2].coeff);
    add_scaled(pt.coeff, dt, kp[2].coeff);
    coupled_rhs(state, it, pt, ki[3], kp[3]);

    for (std::size_t i = 0; i < i0.coeff.size(); ++i) {
        state.inter_hat.coeff[i] += dt / 6.0 * (ki[0].coeff[i] + 2.0 * ki[1].coeff[i] +
                                                2.0 * ki[2].coeff[i] + ki[3].coeff[i]);
        state.ext_hat.coeff[i] += dt / 6.0 * (kp[0].coeff[i] + 2.0 * kp[1].coeff[i] +
                                              2.0 * kp[2].coeff[i] + kp[3].coeff[i]);
    }
    if (state.config.filter_strength > 0.0) {
        exp_filter(state.inter_hat, state.config.filter_strength);
        exp_filter(state.ext_hat, state.config.filter_strength);
    }
    state.time += dt;

    check_finite(state.inter_hat, state.time);
    check_finite(state.ext_hat, state.time);
    SpectralField sum = state.inter_hat;
    add_scaled(sum.coeff, 1.0, state.ext_hat.coeff);
    check_tail(sum, state.initial_tail, state.time);
}

double suggest_dt(const CoupledState& state) {
    if (state.config.dt > 0.0) return state.config.dt;
    SpectralField sum = state.inter_hat;
    add_scaled(sum.coeff, 1.0, state.ext_hat.coeff);
    return cfl_dt(sum.grid, max_speed(sum, state.config.dealias), 0.0, state.config.cfl);
}

NormTrace run_coupled(CoupledState& state, const RunOptions& opts,
                      const std::function<void(double, const ScalarField&, const ScalarField&)>&
                          on_output) {
    if (opts.T < 0.0) fail(ErrorKind::InvalidArgument, "run requires T >= 0");
    TraceAccumulator acc;

    auto record = [&](double t) {
        ScalarField inter = to_physical(state.inter_hat);
        ScalarField ext = to_physical(state.ext_hat);
        SpectralField sum_hat = state.inter_hat;
        add_scaled(sum_hat.coeff, 1.0, state.ext_hat.coeff);
        acc.record(t, sum_hat, inter + ext, inter, ext, opts.quad_k);
        if (on_output) on_output(t, inter, ext);
    };
    record(state.time);
    if (opts.T == 0.0) return acc.trace;

    const double t_final = state.time + opts.T;
    const std::size_t outputs = std::max<std::size_t>(opts.outputs, 1);
    const double dt_out = opts.T / static_cast<double>(outputs);
    const double t0 = acc.trace.rows.front().t;
    for (std::size_t j = 1; j <= outputs; ++j) {
        const double t_next = std::min(t_final, t0 + dt_out * static_cast<double>(j));
        while (state.time < t_next - 1e-12) {
            const double dt = std::min(suggest_dt(state), t_next - state.time);
            step_coupled(state, dt);
        }
        record(state.time);
        if (state.time >= t_final - 1e-12) break;
    }
    return acc.trace;
}

}  // namespace ipm
