#include "profiles.hpp"

#include <algorithm>
#include <cmath>

namespace ipm {

namespace {

double psi(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }
double psi_d1(double u) { return u > 0.0 ? psi(u) / (u * u) : 0.0; }
double psi_d2(double u) {
    if (u <= 0.0) return 0.0;
    const double u2 = u * u;
    return psi(u) * (1.0 / (u2 * u2) - 2.0 / (u2 * u));
}

}  // namespace

double SmoothStep::value(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double p = psi(u), q = psi(1.0 - u);
    return p / (p + q);
}

double SmoothStep::d1(double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    const double p = psi(u), q = psi(1.0 - u);
    const double pd = psi_d1(u), qd = -psi_d1(1.0 - u);
    const double D = p + q;
    return (pd * q - p * qd) / (D * D);
}

double SmoothStep::d2(double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    const double p = psi(u), q = psi(1.0 - u);
    const double pd = psi_d1(u), qd = -psi_d1(1.0 - u);
    const double pdd = psi_d2(u), qdd = psi_d2(1.0 - u);
    const double D = p + q, Dd = pd + qd;
    return (pdd * q - p * qdd) / (D * D) - 2.0 * (pd * q - p * qd) * Dd / (D * D * D);
}

double smooth_cutoff(double r, double r0, double r1) {
    if (!(r0 < r1)) fail(ErrorKind::InvalidArgument, "smooth_cutoff requires r0 < r1");
    return SmoothStep::value((r1 - r) / (r1 - r0));
}

double smooth_cutoff_d1(double r, double r0, double r1) {
    return -SmoothStep::d1((r1 - r) / (r1 - r0)) / (r1 - r0);
}

double smooth_cutoff_d2(double r, double r0, double r1) {
    const double w = r1 - r0;
    return SmoothStep::d2((r1 - r) / w) / (w * w);
}

ScalarField sample(const Profile& p, const GridSpec& grid) {
    ScalarField f(grid);
    for (std::uint32_t i1 = 0; i1 < grid.n; ++i1) {
        const double x1 = grid.node(i1);
        for (std::uint32_t i2 = 0; i2 < grid.n; ++i2)
            f.at(i1, i2) = p.value(x1, grid.node(i2));
    }
    return f;
}

namespace {
constexpr double kHoleR0 = 0.5;
constexpr double kHoleR1 = 1.0;
}  // namespace

Profile hole_base() {
    Profile p;
    p.support_radius = kHoleR1;
    p.vanish_radius = 0.0;
    p.value = [](double x1, double x2) {
        const double r = std::hypot(x1, x2);
        return r >= kHoleR1 ? 0.0 : x2 * smooth_cutoff(r, kHoleR0, kHoleR1);
    };
    p.grad = [](double x1, double x2) -> std::array<double, 2> {
        const double r = std::hypot(x1, x2);
        if (r >= kHoleR1) return {0.0, 0.0};
        if (r <= kHoleR0) return {0.0, 1.0};
        const double c = smooth_cutoff(r, kHoleR0, kHoleR1);
        const double cp = smooth_cutoff_d1(r, kHoleR0, kHoleR1);
        return {x2 * cp * x1 / r, c + x2 * cp * x2 / r};
    };
    p.hess = [](double x1, double x2) -> std::array<double, 3> {
        const double r = std::hypot(x1, x2);
        if (r >= kHoleR1 || r <= kHoleR0) return {0.0, 0.0, 0.0};
        const double cp = smooth_cutoff_d1(r, kHoleR0, kHoleR1);
        const double cpp = smooth_cutoff_d2(r, kHoleR0, kHoleR1);
        const double u = x1, v = x2, r2 = r * r, r3 = r2 * r;
        const double d11 = v * (cpp * u * u / r2 + cp * (1.0 / r - u * u / r3));
        const double d12 = cp * u / r + u * v * v * (cpp / r2 - cp / r3);
        const double d22 = 3.0 * v * cp / r + v * v * v * (cpp / r2 - cp / r3);
        return {d11, d12, d22};
    };
    return p;
}

HoleProfileSpec make_hole_spec(std::uint32_t layers, double lambda1, double ratio) {
    if (layers < 1) fail(ErrorKind::InvalidArgument, "hole profile needs at least one layer");
    if (!(lambda1 > 1.0)) fail(ErrorKind::InvalidArgument, "hole profile requires lambda_1 > 1");
    if (!(ratio > 2.0)) fail(ErrorKind::InvalidArgument, "hole profile requires ratio > 2");
    HoleProfileSpec s;
    s.layers = layers;
    s.lambda.resize(layers);
    for (std::uint32_t i = 0; i < layers; ++i)
        s.lambda[i] = lambda1 * std::pow(ratio, static_cast<double>(i));
    s.amplitude = 1.0 / harmonic_number(layers);
    return s;
}

Profile hole_profile(const HoleProfileSpec& spec) {
    if (spec.layers < 1 || spec.lambda.size() != spec.layers)
        fail(ErrorKind::InvalidArgument, "hole spec is incomplete");
    if (!(spec.lambda.front() > 1.0))
        fail(ErrorKind::InvalidArgument, "hole profile requires lambda_1 > 1");
    for (std::size_t i = 0; i + 1 < spec.lambda.size(); ++i)
        if (!(spec.lambda[i + 1] > 2.0 * spec.lambda[i]))
            fail(ErrorKind::InvalidArgument, "hole profile requires lambda_{i+1} > 2 lambda_i");

    const Profile base = hole_base();
    const auto spec_copy = spec;
    Profile p;
    p.support_radius = 1.0 / spec.lambda.front();
    p.vanish_radius = 0.0;
    p.value = [spec_copy, base](double x1, double x2) {
        double acc = 0.0;
        for (std::uint32_t i = 0; i < spec_copy.layers; ++i) {
            const double lam = spec_copy.lambda[i];
            acc += base.value(lam * x1, lam * x2) / (static_cast<double>(i + 1) * lam);
        }
        return spec_copy.amplitude * acc;
    };
    p.grad = [spec_copy, base](double x1, double x2) -> std::array<double, 2> {
        std::array<double, 2> acc{0.0, 0.0};
        for (std::uint32_t i = 0; i < spec_copy.layers; ++i) {
            const double lam = spec_copy.lambda[i];
            const auto g = base.grad(lam * x1, lam * x2);
            acc[0] += g[0] / static_cast<double>(i + 1);
            acc[1] += g[1] / static_cast<double>(i + 1);
        }
        acc[0] *= spec_copy.amplitude;
        acc[1] *= spec_copy.amplitude;
        return acc;
    };
    p.hess = [spec_copy, base](double x1, double x2) -> std::array<double, 3> {
        std::array<double, 3> acc{0.0, 0.0, 0.0};
        for (std::uint32_t i = 0; i < spec_copy.layers; ++i) {
            const double lam = spec_copy.lambda[i];
            const auto h = base.hess(lam * x1, lam * x2);
            const double w = lam / static_cast<double>(i + 1);
            acc[0] += w * h[0];
            acc[1] += w * h[1];
            acc[2] += w * h[2];
        }
        for (double& v : acc) v *= spec_copy.amplitude;
        return acc;
    };
    return p;
}

namespace {
void require_in_box(const Profile& p, const GridSpec& grid, const char* what) {
    if (p.support_radius > 0.5 * grid.half_width)
        fail(ErrorKind::InvalidArgument,
             std::string(what) + ": support must stay inside B_{L/2}");
}
}  // namespace

ScalarField build_hole_profile(const HoleProfileSpec& spec, const GridSpec& grid) {
    const double lam_max = spec.lambda.back();
    if (2.0 * M_PI / (lam_max * grid.spacing()) < 8.0)
        fail(ErrorKind::UnderResolved, "hole profile: finest layer under-resolved on this grid");
    Profile p = hole_profile(spec);
    require_in_box(p, grid, "hole profile");
    return sample(p, grid);
}

namespace {

// H2 pairing <g_i, g_j>_L2 + 2<grad,grad> + <Lap,Lap> of two scaled copies
// of the hole base, by closed-form quadrature over the finer support.
double hole_pair_inner(const Profile& base, double li, double lj, double rel_tol) {
    const double R = 1.0 / std::max(li, lj);
    Fn2 integrand = [&](double x1, double x2) {
        const auto vi = base.value(li * x1, li * x2);
        const auto vj = base.value(lj * x1, lj * x2);
        const auto gi = base.grad(li * x1, li * x2);
        const auto gj = base.grad(lj * x1, lj * x2);
        const auto hi = base.hess(li * x1, li * x2);
        const auto hj = base.hess(lj * x1, lj * x2);
        const double lap_i = li * li * (hi[0] + hi[2]);
        const double lap_j = lj * lj * (hj[0] + hj[2]);
        return vi * vj + 2.0 * (li * lj) * (gi[0] * gj[0] + gi[1] * gj[1]) + lap_i * lap_j;
    };
    return integrate2(integrand, -R, R, -R, R, 0.0, rel_tol).value;
}

}  // namespace

double hole_h2_norm(const HoleProfileSpec& spec, double rel_tol) {
    const Profile base = hole_base();
    double acc = 0.0;
    for (std::uint32_t i = 0; i < spec.layers; ++i) {
        for (std::uint32_t j = i; j < spec.layers; ++j) {
            const double wi = spec.amplitude / (static_cast<double>(i + 1) * spec.lambda[i]);
            const double wj = spec.amplitude / (static_cast<double>(j + 1) * spec.lambda[j]);
            const double inner = hole_pair_inner(base, spec.lambda[i], spec.lambda[j], rel_tol);
            acc += (i == j ? 1.0 : 2.0) * wi * wj * inner;
        }
    }
    return std::sqrt(acc);
}

double base_h2_norm(double rel_tol) {
    return std::sqrt(hole_pair_inner(hole_base(), 1.0, 1.0, rel_tol));
}

Profile cone_layer(double r_in, double r_out, double cone_constant) {
    if (!(r_in < r_out) || !(r_in > 0.0))
        fail(ErrorKind::InvalidArgument, "cone layer requires 0 < r_in < r_out");
    if (!(cone_constant >= std::sqrt(3.0)))
        fail(ErrorKind::Hypothesis, "cone layer requires cone_constant >= sqrt(3)");
    // 5% margin keeps the support strictly inside the requested cone after
    // discretization.
    const double w1 = 1.0 / (1.05 * cone_constant);
    const double w0 = 0.5 * w1;
    const double rise = 0.35 * (r_out - r_in);
    Profile p;
    p.support_radius = r_out;
    p.vanish_radius = r_in;
    p.value = [=](double x1, double x2) {
        if (x2 == 0.0) return 0.0;
        const double w = std::abs(x1) / std::abs(x2);
        if (w >= w1) return 0.0;
        const double r = std::hypot(x1, x2);
        if (r <= r_in || r >= r_out) return 0.0;
        const double b = SmoothStep::value((r - r_in) / rise) *
                         SmoothStep::value((r_out - r) / rise);
        const double ang = SmoothStep::value((w1 - w) / (w1 - w0));
        return -x2 * b * ang;
    };
    return p;
}

ScalarField build_cone_layer(const GridSpec& grid, double r_in, double r_out,
                             double cone_constant) {
    ScalarField f = sample(cone_layer(r_in, r_out, cone_constant), grid);
    if (max_abs(f) == 0.0)
        fail(ErrorKind::UnderResolved, "cone layer: no grid point falls inside the cone support");
    return f;
}

Profile cone_stack(const ConeStackSpec& spec) {
    if (spec.layers < 1) fail(ErrorKind::InvalidArgument, "cone stack needs at least one layer");
    if (!(spec.r_out <= 2.0 * spec.r_in))
        fail(ErrorKind::InvalidArgument, "cone stack layers must have disjoint supports (r_out <= 2 r_in)");
    const Profile base = cone_layer(spec.r_in, spec.r_out, spec.cone_constant);
    const auto s = spec;
    Profile p;
    p.support_radius = spec.r_out / 2.0;
    p.vanish_radius = spec.r_in / std::pow(2.0, static_cast<double>(spec.layers));
    p.value = [s, base](double x1, double x2) {
        double acc = 0.0;
        for (std::uint32_t i = 1; i <= s.layers; ++i) {
            const double sc = std::pow(2.0, static_cast<double>(i));
            acc += base.value(sc * x1, sc * x2) / (static_cast<double>(i) * sc);
        }
        return s.delta0 * acc;
    };
    return p;
}

ScalarField build_cone_stack(const ConeStackSpec& spec, const GridSpec& grid) {
    const double finest = std::pow(2.0, static_cast<double>(spec.layers));
    if ((spec.r_out - spec.r_in) / finest < 6.0 * grid.spacing())
        fail(ErrorKind::UnderResolved, "cone stack: finest layer under-resolved on this grid");
    Profile p = cone_stack(spec);
    require_in_box(p, grid, "cone stack");
    return sample(p, grid);
}

Profile oscillatory_layer(const OscillatorySpec& spec) {
    if (spec.frequency < 2) fail(ErrorKind::InvalidArgument, "oscillatory layer requires N >= 2");
    if (!(spec.l2_target > 0.0)) fail(ErrorKind::InvalidArgument, "oscillatory layer requires l2_target > 0");
    constexpr double b_in = 0.1, b_out = 1.0, rise = 0.3;
    auto bump = [](double r) {
        return SmoothStep::value((r - b_in) / rise) * SmoothStep::value((b_out - r) / rise);
    };
    // ||A b(|x|)||_L2 = A sqrt(2 pi int b^2 r dr)
    QuadResult q = integrate([&](double r) { return bump(r) * bump(r) * r; }, b_in, b_out,
                             0.0, 1e-12);
    const double amp = spec.l2_target / std::sqrt(2.0 * M_PI * q.value);

    const double N = static_cast<double>(spec.frequency);
    const double freq = std::pow(N, 1.1);
    const double norm = std::pow(N, 1.2);
    const double theta0 = spec.theta0;
    Profile p;
    p.support_radius = 1.0 / N;
    p.vanish_radius = b_in / N;
    p.value = [=](double x1, double x2) {
        const double r = N * std::hypot(x1, x2);
        if (r <= b_in || r >= b_out) return 0.0;
        return amp * bump(r) * std::sin(freq * x1 + theta0) / norm;
    };
    return p;
}

ScalarField build_oscillatory_layer(const OscillatorySpec& spec, const GridSpec& grid) {
    const double N = static_cast<double>(spec.frequency);
    const double wavelength = 2.0 * M_PI / std::pow(N, 1.1);
    if (wavelength < 4.0 * grid.spacing())
        fail(ErrorKind::UnderResolved, "oscillatory layer: carrier frequency under-resolved");
    if (2.0 / N < 8.0 * grid.spacing())
        fail(ErrorKind::UnderResolved, "oscillatory layer: bump support under-resolved");
    return sample(oscillatory_layer(spec), grid);
}

double harmonic_number(std::uint32_t k) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "harmonic_number requires K >= 1");
    double h = 0.0;
    for (std::uint32_t i = 1; i <= k; ++i) h += 1.0 / static_cast<double>(i);
    return h;
}

}  // namespace ipm
