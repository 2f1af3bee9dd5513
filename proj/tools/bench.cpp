#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mdinf/inversion.hpp"
#include "mdinf/model.hpp"
#include "mdinf/series.hpp"
#include "mdinf/simulator.hpp"

using namespace mdinf;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace

// Parallel kernels against their serial references: same numbers expected,
// wall time reported for both.
int main(int argc, char** argv) {
    long long sim_n = 200'000;
    if (argc > 1) sim_n = std::atoll(argv[1]);
    const int hw = max_threads();
    std::printf("threads available: %d\n\n", hw);

    {
        const auto params = make_params(1.0, 3.0);
        const inversion::PabConfig cfg{0.5, 0.01, 3, 2'000'000};
        const double t = 20.0;
        std::printf("tail inversion, N = %lld terms\n",
                    static_cast<long long>(inversion::derive(params, cfg).n_terms));
        auto t0 = std::chrono::steady_clock::now();
        const double par = inversion::tail(params, cfg, t);
        const double t_par = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        const double ser = inversion::tail_reference(params, cfg, t);
        const double t_ser = seconds_since(t0);
        std::printf("  parallel %.6f s   serial %.6f s   |diff| %.3e\n\n", t_par, t_ser,
                    std::fabs(par - ser));
    }

    {
        const auto params = make_params(1.0, 1.0);
        sim::SimConfig cfg;
        cfg.n_samples = sim_n;
        cfg.seed = 42;
        cfg.workers = 1;
        auto t0 = std::chrono::steady_clock::now();
        const auto one = sim::run(params, cfg);
        const double t_one = seconds_since(t0);
        cfg.workers = 0;
        t0 = std::chrono::steady_clock::now();
        const auto many = sim::run(params, cfg);
        const double t_many = seconds_since(t0);
        bool identical = one.samples->size() == many.samples->size();
        for (size_t i = 0; identical && i < one.samples->size(); ++i) {
            identical = (*one.samples)[i] == (*many.samples)[i];
        }
        std::printf("simulator, n = %lld\n", sim_n);
        std::printf("  1 thread %.6f s   %d threads %.6f s   samples identical: %s\n\n",
                    t_one, hw, t_many, identical ? "yes" : "no");
    }

    {
        const auto params = make_params(1.0, 1.0);
        const double t_max = 6.0;
        set_threads(1);
        auto t0 = std::chrono::steady_clock::now();
        const series::GridEvaluator serial(params, t_max, 1e-8);
        const double t_ser = seconds_since(t0);
        set_threads(hw);
        t0 = std::chrono::steady_clock::now();
        const series::GridEvaluator parallel(params, t_max, 1e-8);
        const double t_par = seconds_since(t0);
        bool identical = true;
        double worst = 0.0;
        for (double t = 1.0; t <= t_max; t += 0.01) {
            const double a = serial.cdf(t), b = parallel.cdf(t);
            identical = identical && a == b;
            worst = std::max(worst, std::fabs(a - b));
        }
        std::printf("grid convolution march, %d terms, step %.4f\n", serial.terms_used(),
                    serial.grid_step());
        std::printf("  1 thread %.6f s   %d threads %.6f s   identical: %s   max |diff| %.3e\n",
                    t_ser, hw, t_par, identical ? "yes" : "no", worst);
    }
    return 0;
}
