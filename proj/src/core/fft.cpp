#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace ipm {

namespace {

// Plan creation is not thread-safe in FFTW; executions via the new-array
// interface are. One shared cache, one lock around plan creation.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
};

std::mutex g_plan_mutex;
std::map<std::uint32_t, PlanPair>& plan_cache() {
    static std::map<std::uint32_t, PlanPair> cache;
    return cache;
}

PlanPair get_plans(std::uint32_t n) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const int ni = static_cast<int>(n);
    std::vector<double> real(static_cast<std::size_t>(n) * n);
    std::vector<fftw_complex> cplx(static_cast<std::size_t>(n) * (n / 2 + 1));
    PlanPair p;
    // FFTW_ESTIMATE keeps plan choice deterministic across runs.
    p.fwd = fftw_plan_dft_r2c_2d(ni, ni, real.data(), cplx.data(), FFTW_ESTIMATE);
    p.inv = fftw_plan_dft_c2r_2d(ni, ni, cplx.data(), real.data(), FFTW_ESTIMATE);
    cache.emplace(n, p);
    return p;
}

}  // namespace

SpectralField to_spectral(const ScalarField& f) {
    SpectralField out(f.grid);
    PlanPair p = get_plans(f.grid.n);
    std::vector<double> tmp(f.values);  // r2c input is destroyed by FFTW
    fftw_execute_dft_r2c(p.fwd, tmp.data(),
                         reinterpret_cast<fftw_complex*>(out.coeff.data()));
    return out;
}

ScalarField to_physical(const SpectralField& s) {
    ScalarField out(s.grid);
    PlanPair p = get_plans(s.grid.n);
    std::vector<std::complex<double>> tmp(s.coeff);  // c2r input is destroyed
    fftw_execute_dft_c2r(p.inv, reinterpret_cast<fftw_complex*>(tmp.data()),
                         out.values.data());
    const double scale = 1.0 / (static_cast<double>(s.grid.n) * s.grid.n);
    for (double& v : out.values) v *= scale;
    return out;
}

}  // namespace ipm
