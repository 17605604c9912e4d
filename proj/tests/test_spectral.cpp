#include <doctest.h>

#include <cmath>

#include "fft.hpp"
#include "grid.hpp"
#include "profiles.hpp"
#include "spectral.hpp"
#include "test_util.hpp"

using namespace ipm;
using ipm::test::random_smooth_field;
using ipm::test::rel_gap;

TEST_CASE("make_grid validates its inputs") {
    GridSpec g = make_grid(256, 4.0);
    CHECK(g.spacing() == doctest::Approx(0.03125).epsilon(1e-15));
    CHECK(make_grid(16, 1.0).size() == 256);
    CHECK_THROWS_WITH_AS(make_grid(100, 4.0), doctest::Contains("power of two"), Error);
    CHECK_THROWS_AS(make_grid(8, 1.0), Error);
    CHECK_THROWS_AS(make_grid(256, -1.0), Error);
    CHECK(g.node(0) == doctest::Approx(-4.0));
    CHECK(g.node(128) == doctest::Approx(0.0));
}

TEST_CASE("spectral round trip reproduces the field") {
    GridSpec g = make_grid(64, 2.0);
    ScalarField f = random_smooth_field(g, 7);
    ScalarField back = to_physical(to_spectral(f));
    double worst = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        worst = std::max(worst, std::abs(f.values[i] - back.values[i]));
    CHECK(worst <= 1e-12 * std::max(1.0, max_abs(f)));
}

TEST_CASE("riesz acts as i xi_a/|xi| on single modes") {
    GridSpec g = make_grid(64, 2.0);
    const double L = g.half_width;

    // rho = 0 -> 0
    ScalarField zero(g);
    CHECK(max_abs(to_physical(riesz(to_spectral(zero), 1))) == 0.0);

    // Mode xi = (k, 0), k > 0: multiplier i*k/|k| = i, so R1 sin = cos and
    // R1 cos = -sin.
    const int m = 3;
    ScalarField s(g), expect(g);
    for (std::uint32_t i1 = 0; i1 < g.n; ++i1)
        for (std::uint32_t i2 = 0; i2 < g.n; ++i2) {
            s.at(i1, i2) = std::sin(M_PI * m * g.node(i1) / L);
            expect.at(i1, i2) = std::cos(M_PI * m * g.node(i1) / L);
        }
    ScalarField r = to_physical(riesz(to_spectral(s), 1));
    for (std::size_t i = 0; i < r.values.size(); ++i)
        CHECK(r.values[i] == doctest::Approx(expect.values[i]).epsilon(1e-10));
}

TEST_CASE("riesz identity R1^2 + R2^2 = -Id on mean-zero fields") {
    GridSpec g = make_grid(64, 2.0);
    ScalarField f = random_smooth_field(g, 11);
    SpectralField fh = to_spectral(f);
    zero_mean(fh);
    ScalarField fz = to_physical(fh);
    SpectralField r11 = riesz(riesz(fh, 1), 1);
    SpectralField r22 = riesz(riesz(fh, 2), 2);
    ScalarField sum = to_physical(r11) + to_physical(r22);
    double worst = 0.0;
    for (std::size_t i = 0; i < sum.values.size(); ++i)
        worst = std::max(worst, std::abs(sum.values[i] + fz.values[i]));
    CHECK(worst <= 1e-12 * std::max(1.0, max_abs(fz)));
}

TEST_CASE("velocity is divergence-free and kills the origin for symmetric data") {
    GridSpec g = make_grid(128, 2.0);
    ScalarField zero(g);
    VelocityField u0 = velocity(zero);
    CHECK(max_abs(u0.u1) == 0.0);
    CHECK(max_abs(u0.u2) == 0.0);

    ScalarField f = random_smooth_field(g, 3, /*symmetric=*/true);
    REQUIRE(symmetry_defect(f) <= 1e-12 * max_abs(f));
    VelocityField u = velocity(f);
    const double umax = std::max(max_abs(u.u1), max_abs(u.u2));
    CHECK(divergence_max(u.u1, u.u2) <= 1e-12 * std::max(1.0, umax) * 100.0);

    const std::uint32_t o = g.n / 2;  // x = 0
    CHECK(std::abs(u.u1.at(o, o)) <= 1e-10 * std::max(1.0, umax));
    CHECK(std::abs(u.u2.at(o, o)) <= 1e-10 * std::max(1.0, umax));

    // Parity: u1 odd in x1 / even in x2, u2 even in x1 / odd in x2.
    double defect = 0.0;
    for (std::uint32_t i1 = 0; i1 < g.n; ++i1) {
        const std::uint32_t r1 = (g.n - i1) % g.n;
        for (std::uint32_t i2 = 0; i2 < g.n; ++i2) {
            const std::uint32_t r2 = (g.n - i2) % g.n;
            defect = std::max(defect, std::abs(u.u1.at(i1, i2) + u.u1.at(r1, i2)));
            defect = std::max(defect, std::abs(u.u1.at(i1, i2) - u.u1.at(i1, r2)));
            defect = std::max(defect, std::abs(u.u2.at(i1, i2) - u.u2.at(r1, i2)));
            defect = std::max(defect, std::abs(u.u2.at(i1, i2) + u.u2.at(i1, r2)));
        }
    }
    CHECK(defect <= 1e-10 * std::max(1.0, umax));
}

TEST_CASE("dissipation acts as -xi1^2/|xi|^2 with nonpositive energy pairing") {
    GridSpec g = make_grid(64, 2.0);
    ScalarField zero(g);
    CHECK(max_abs(dissipation(zero)) == 0.0);

    // Mode (k, 0): multiplier -k^2/k^2 = -1.
    ScalarField s(g);
    for (std::uint32_t i1 = 0; i1 < g.n; ++i1)
        for (std::uint32_t i2 = 0; i2 < g.n; ++i2)
            s.at(i1, i2) = std::sin(M_PI * 5 * g.node(i1) / g.half_width);
    ScalarField d = dissipation(s);
    for (std::size_t i = 0; i < d.values.size(); ++i)
        CHECK(d.values[i] == doctest::Approx(-s.values[i]).epsilon(1e-10));

    // <R1^2 rho, rho> = -|| (-Lap)^{-1/2} d_x1 rho ||_L2^2
    ScalarField f = random_smooth_field(g, 19);
    SpectralField fh = to_spectral(f);
    zero_mean(fh);
    const double lhs = l2_inner(to_spectral(dissipation(to_physical(fh))), fh);
    SpectralField half = riesz(fh, 1);  // i xi1/|xi| = (-Lap)^{-1/2} d_x1
    const double rhs = -l2_inner(half, half);
    CHECK(lhs <= 0.0);
    CHECK(rel_gap(lhs, rhs) <= 1e-10);
}

TEST_CASE("sobolev norm matches L2 at s=0 and a 4x-resolution oracle") {
    GridSpec g = make_grid(64, 2.0);
    ScalarField zero(g);
    CHECK(sobolev_norm(zero, 1.5) == 0.0);

    ScalarField f = random_smooth_field(g, 23);
    // s = 0: discrete L2 with the integral normalization.
    double l2 = 0.0;
    for (double v : f.values) l2 += v * v;
    l2 = std::sqrt(l2 * g.spacing() * g.spacing());
    CHECK(rel_gap(sobolev_norm(f, 0.0), l2) <= 1e-12);

    // Gaussian-cutoff bump: dense-quadrature oracle = same sum at 4x
    // resolution (the spectrum is fully resolved at both sizes).
    auto bump = [](double x1, double x2) {
        const double r2 = x1 * x1 + x2 * x2;
        return std::exp(-4.0 * r2) * (1.0 - std::exp(-8.0 * (2.25 - r2 > 0 ? 2.25 - r2 : 0.0)));
    };
    GridSpec fine = make_grid(256, 2.0);
    ScalarField c(g), cf(fine);
    for (std::uint32_t i1 = 0; i1 < g.n; ++i1)
        for (std::uint32_t i2 = 0; i2 < g.n; ++i2)
            c.at(i1, i2) = bump(g.node(i1), g.node(i2));
    for (std::uint32_t i1 = 0; i1 < fine.n; ++i1)
        for (std::uint32_t i2 = 0; i2 < fine.n; ++i2)
            cf.at(i1, i2) = bump(fine.node(i1), fine.node(i2));
    for (double s : {1.0, 2.0}) {
        CHECK(rel_gap(sobolev_norm(c, s), sobolev_norm(cf, s)) <= 1e-3);
    }
}

TEST_CASE("c1 norm examples") {
    GridSpec g = make_grid(64, 2.0);
    ScalarField zero(g);
    CHECK(c1_norm(zero) == 0.0);

    ScalarField s(g);
    for (std::uint32_t i1 = 0; i1 < g.n; ++i1)
        for (std::uint32_t i2 = 0; i2 < g.n; ++i2)
            s.at(i1, i2) = std::sin(M_PI * g.node(i1) / g.half_width);
    CHECK(c1_norm(s) == doctest::Approx(1.0 + M_PI / g.half_width).epsilon(1e-6));

    ScalarField f = random_smooth_field(g, 31);
    CHECK(rel_gap(c1_norm(-2.5 * f), 2.5 * c1_norm(f)) <= 1e-12);
}

TEST_CASE("origin deformation gradient is scaling invariant on the grid") {
    // d_x1 u1[f(lambda .)/lambda](0) = d_x1 u1[f](0), exactly on R^2. On a
    // shared grid the comparison carries image + resolution bias, checked at
    // the 1% level for the scales the grid resolves; the sharp 1e-8 identity
    // is covered by the kernel-quad oracle tests. On boxes scaled with the
    // profile the discrete identity is exact (multiplier homogeneity).
    GridSpec g = make_grid(1024, 4.0);
    Profile cone = cone_layer(0.55, 0.95, 2.0);
    const double base = origin_deformation_spectral(sample(cone, g));
    for (double lam : {2.0, 4.0, 8.0}) {
        Profile scaled;
        scaled.support_radius = cone.support_radius / lam;
        scaled.vanish_radius = cone.vanish_radius / lam;
        Fn2 v = cone.value;
        scaled.value = [v, lam](double x1, double x2) { return v(lam * x1, lam * x2) / lam; };
        if (lam <= 4.0) {
            const double d = origin_deformation_spectral(sample(scaled, g));
            CHECK(rel_gap(base, d) <= 1e-2);
        }
        GridSpec gs = make_grid(g.n, g.half_width / lam);
        const double ds = origin_deformation_spectral(sample(scaled, gs));
        CHECK(rel_gap(base, ds) <= 1e-12);
    }
}
