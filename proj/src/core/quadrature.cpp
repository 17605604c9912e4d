#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

namespace ipm {

namespace {

// Gauss-Kronrod 7-15 nodes/weights (QUADPACK dqk15), positive half.
constexpr std::array<double, 8> kXgk = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr std::array<double, 4> kWg = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelEval {
    double kronrod;
    double gauss;
};

PanelEval gk15(const Fn1& f, double a, double b, std::size_t& evals) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double kr = kWgk[7] * f(c);
    double gs = kWg[3] * f(c);
    evals += 1;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double fl = f(c - dx), fr = f(c + dx);
        evals += 2;
        kr += kWgk[i] * (fl + fr);
        if (i % 2 == 1) gs += kWg[i / 2] * (fl + fr);
    }
    return {kr * h, gs * h};
}

void adapt(const Fn1& f, double a, double b, double tol, int depth, QuadResult& out) {
    PanelEval p = gk15(f, a, b, out.evals);
    const double err = std::abs(p.kronrod - p.gauss);
    if (err <= tol || depth >= 40) {
        out.value += p.kronrod;
        out.error += err;
        if (err > tol) out.converged = false;
        return;
    }
    const double m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * tol, depth + 1, out);
    adapt(f, m, b, 0.5 * tol, depth + 1, out);
}

}  // namespace

QuadResult integrate(const Fn1& f, double a, double b, double abs_tol, double rel_tol) {
    QuadResult out;
    if (a == b) return out;
    PanelEval whole = gk15(f, a, b, out.evals);
    const double scale = std::max(std::abs(whole.kronrod), std::abs(whole.gauss));
    const double tol = std::max(abs_tol, rel_tol * scale);
    out.evals = 0;
    adapt(f, a, b, tol, 0, out);
    return out;
}

QuadResult integrate2(const Fn2& f, double ax, double bx, double ay, double by,
                      double abs_tol, double rel_tol) {
    QuadResult out;
    // Inner integrals run a notch tighter so the outer error estimate is not
    // polluted by inner noise.
    const double inner_abs = 0.1 * abs_tol / std::max(1.0, bx - ax);
    const double inner_rel = 0.1 * rel_tol;
    std::size_t inner_evals = 0;
    bool inner_ok = true;
    Fn1 outer = [&](double x) {
        QuadResult r = integrate([&](double y) { return f(x, y); }, ay, by, inner_abs, inner_rel);
        inner_evals += r.evals;
        inner_ok = inner_ok && r.converged;
        return r.value;
    };
    QuadResult r = integrate(outer, ax, bx, abs_tol, rel_tol);
    r.evals = inner_evals;
    r.converged = r.converged && inner_ok;
    return r;
}

SampledDensity sample_field(const ScalarField& f) {
    const GridSpec grid = f.grid;
    const std::uint32_t n = grid.n;
    const double L = grid.half_width, h = grid.spacing();

    // Measured support radii at the relative zero level.
    const double thresh = 1e-13 * std::max(1.0, max_abs(f));
    double rmax = 0.0, rmin2 = 2.0 * L * L;
    for (std::uint32_t i1 = 0; i1 < n; ++i1) {
        const double x1 = grid.node(i1);
        for (std::uint32_t i2 = 0; i2 < n; ++i2) {
            if (std::abs(f.at(i1, i2)) <= thresh) continue;
            const double x2 = grid.node(i2);
            const double r2 = x1 * x1 + x2 * x2;
            rmax = std::max(rmax, std::sqrt(r2));
            rmin2 = std::min(rmin2, r2);
        }
    }
    SampledDensity d;
    d.support_radius = std::min(L * std::sqrt(2.0), rmax + 2.0 * h);
    d.vanish_radius = std::max(0.0, std::sqrt(rmin2) - 2.0 * h);

    auto values = std::make_shared<std::vector<double>>(f.values);
    d.eval = [grid, values](double x1, double x2) {
        const std::uint32_t n = grid.n;
        const double h = grid.spacing();
        const double s1 = (x1 + grid.half_width) / h;
        const double s2 = (x2 + grid.half_width) / h;
        const long i1 = static_cast<long>(std::floor(s1));
        const long i2 = static_cast<long>(std::floor(s2));
        const double t1 = s1 - static_cast<double>(i1);
        const double t2 = s2 - static_cast<double>(i2);
        auto wrap = [n](long i) {
            long m = i % static_cast<long>(n);
            return static_cast<std::uint32_t>(m < 0 ? m + n : m);
        };
        auto cr = [](double pm1, double p0, double p1, double p2, double t) {
            // Catmull-Rom
            return p0 + 0.5 * t * (p1 - pm1 +
                   t * (2.0 * pm1 - 5.0 * p0 + 4.0 * p1 - p2 +
                   t * (3.0 * (p0 - p1) + p2 - pm1)));
        };
        double rows[4];
        for (int a = -1; a <= 2; ++a) {
            const std::uint32_t ia = wrap(i1 + a);
            double col[4];
            for (int b = -1; b <= 2; ++b)
                col[b + 1] = (*values)[static_cast<std::size_t>(ia) * n + wrap(i2 + b)];
            rows[a + 1] = cr(col[0], col[1], col[2], col[3], t2);
        }
        return cr(rows[0], rows[1], rows[2], rows[3], t1);
    };
    return d;
}

namespace {

// Excised convolution int_{eta<|h|<R} H_c(h) rho(x-h) dh in polar
// coordinates; H = angular(theta)/r^2, Jacobian r gives angular/r.
double excised(const SampledDensity& rho, double x1, double x2, int component,
               double eta, double R, double tol) {
    Fn1 radial = [&](double r) {
        Fn1 ang = [&](double th) {
            const double c = std::cos(th), s = std::sin(th);
            const double hk = component == 1 ? -c * s / M_PI : (c * c - s * s) / (2.0 * M_PI);
            return hk * rho.eval(x1 - r * c, x2 - r * s);
        };
        QuadResult q = integrate(ang, 0.0, 2.0 * M_PI, tol * 1e-3, tol * 1e-3);
        return q.value / r;
    };
    return integrate(radial, eta, R, tol * 1e-2, tol * 1e-2).value;
}

}  // namespace

PvVelocity pv_velocity_at(const SampledDensity& rho, double x1, double x2, double tol) {
    if (!std::isfinite(x1) || !std::isfinite(x2))
        fail(ErrorKind::InvalidArgument, "pv_velocity_at: point must be finite");
    const double R = std::hypot(x1, x2) + rho.support_radius + 1e-12;
    const double eta = 1e-3 * std::max(1.0, R);

    PvVelocity v;
    double worst = 0.0;
    double comp[2];
    for (int c = 1; c <= 2; ++c) {
        const double coarse = excised(rho, x1, x2, c, eta, R, tol);
        const double fine = excised(rho, x1, x2, c, 0.5 * eta, R, tol);
        // Excision error is O(eta^2): one Richardson step.
        comp[c - 1] = fine + (fine - coarse) / 3.0;
        worst = std::max(worst, std::abs(fine - coarse) / 3.0);
    }
    v.u1 = comp[0];
    v.u2 = comp[1] - 0.5 * rho.eval(x1, x2);
    v.residual = worst;

    const double scale = std::max({std::abs(v.u1), std::abs(v.u2), 1e-30});
    if (worst > tol * std::max(1.0, scale))
        fail(ErrorKind::Numeric, "pv_velocity_at: excision extrapolation did not converge");
    return v;
}

double origin_deformation(const SampledDensity& rho, double rel_tol) {
    if (rho.vanish_radius <= 0.0)
        fail(ErrorKind::InvalidArgument,
             "origin_deformation: density must vanish on a neighborhood of the origin");
    const double R = rho.support_radius;
    Fn2 integrand = [&](double y1, double y2) {
        const double q = y1 * y1 + y2 * y2;
        if (q < 0.25 * rho.vanish_radius * rho.vanish_radius) return 0.0;
        return y2 * (y2 * y2 - 3.0 * y1 * y1) / (q * q * q) * rho.eval(y1, y2);
    };
    QuadResult r = integrate2(integrand, -R, R, -R, R, 0.0, rel_tol);
    return r.value / M_PI;
}

double origin_deformation_polar(const std::function<double(double, double)>& rho_polar,
                                double r_min, double r_max, double rel_tol) {
    if (!(r_min > 0.0)) fail(ErrorKind::InvalidArgument, "origin_deformation_polar: r_min must be > 0");
    Fn2 integrand = [&](double a, double r) { return -std::sin(3.0 * a) / (r * r) * rho_polar(r, a); };
    QuadResult q = integrate2(integrand, 0.0, 2.0 * M_PI, r_min, r_max, 0.0, rel_tol);
    return q.value / M_PI;
}

}  // namespace ipm
