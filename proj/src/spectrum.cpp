#include "bcipher/spectrum.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace bcipher {

namespace {

// The FFTW planner is not reentrant.
std::mutex planner_mutex;

struct PlanDeleter {
    void operator()(fftw_plan_s* p) const {
        std::lock_guard lock(planner_mutex);
        fftw_destroy_plan(p);
    }
};

struct FftwFree {
    void operator()(void* p) const { fftw_free(p); }
};

} // namespace

std::vector<double> dft_moduli(std::span<const double> signal, std::size_t count) {
    const std::size_t n = signal.size();
    if (n == 0) {
        throw std::invalid_argument("dft_moduli: empty signal");
    }
    const std::size_t bins = n / 2 + 1;
    if (count > bins) {
        throw std::invalid_argument("dft_moduli: count exceeds n/2 + 1");
    }

    std::unique_ptr<double, FftwFree> in(fftw_alloc_real(n));
    std::unique_ptr<fftw_complex, FftwFree> out(fftw_alloc_complex(bins));
    if (!in || !out) {
        throw std::bad_alloc();
    }

    std::unique_ptr<fftw_plan_s, PlanDeleter> plan;
    {
        std::lock_guard lock(planner_mutex);
        plan.reset(fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE));
    }
    if (!plan) {
        throw std::runtime_error("dft_moduli: FFTW planning failed");
    }
    std::copy(signal.begin(), signal.end(), in.get());
    fftw_execute(plan.get());

    std::vector<double> moduli(count);
    for (std::size_t j = 0; j < count; ++j) {
        moduli[j] = std::hypot(out.get()[j][0], out.get()[j][1]);
    }
    return moduli;
}

} // namespace bcipher
