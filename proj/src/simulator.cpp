#include "mdinf/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mdinf/accum.hpp"

namespace mdinf::sim {

namespace detail {

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

double ExpStream::operator()() {
    if (draw >= 1000000000ULL) {
        throw mdinf::resource_error("simulator: busy period exceeded 1e9 arrivals (sample index " +
                                    std::to_string(index) + "); parameters are off the usable range");
    }
    const std::uint64_t counter = (index << 32) | draw;
    ++draw;
    const std::uint64_t bits = mix64(seed_hash ^ (counter * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL));
    // (0, 1]: never 0, so log is finite.
    const double u = (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
    return -std::log(u) / lambda;
}

}  // namespace detail

double EmpiricalCdf::operator()(double t) const {
    if (!sorted || sorted->empty()) return 0.0;
    const auto it = std::upper_bound(sorted->begin(), sorted->end(), t);
    return static_cast<double>(it - sorted->begin()) / static_cast<double>(sorted->size());
}

SimSummary run(const QueueParams& params, const SimConfig& config) {
    if (config.n_samples < 1) {
        throw validation_error("simulator: n_samples must be >= 1");
    }
    if (config.n_samples > 500'000'000LL) {
        throw resource_error("simulator: n_samples above 5e8 would exceed the in-memory sample budget");
    }
    if (config.workers < 0) {
        throw validation_error("simulator: workers must be >= 0 (0 = default)");
    }

    const auto n = static_cast<size_t>(config.n_samples);
    auto samples = std::make_shared<std::vector<double>>(n);
    const std::uint64_t seed_hash = detail::mix64(config.seed + 0x9E3779B97F4A7C15ULL);

#ifdef _OPENMP
    const int threads = config.workers > 0 ? config.workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        detail::ExpStream stream{seed_hash, static_cast<std::uint64_t>(i), 0, params.lambda()};
        (*samples)[static_cast<size_t>(i)] = sample_busy_period(params, stream);
    }

    SimSummary s;
    s.n = config.n_samples;
    s.samples = samples;

    mdinf::detail::CompensatedSum<double> acc;
    double mn = (*samples)[0];
    double mx = (*samples)[0];
    std::int64_t atom_count = 0;
    const double alpha = params.alpha();
    for (double v : *samples) {
        acc.add(v);
        mn = std::min(mn, v);
        mx = std::max(mx, v);
        if (v == alpha) ++atom_count;
    }
    s.mean = acc.value() / static_cast<double>(n);
    s.min = mn;
    s.max = mx;
    s.atom_fraction = static_cast<double>(atom_count) / static_cast<double>(n);

    if (n > 1) {
        mdinf::detail::CompensatedSum<double> sq;
        for (double v : *samples) {
            const double d = v - s.mean;
            sq.add(d * d);
        }
        s.variance = sq.value() / static_cast<double>(n - 1);
        s.std_error_mean = std::sqrt(s.variance / static_cast<double>(n));
    }

    auto sorted = std::make_shared<std::vector<double>>(*samples);
    std::sort(sorted->begin(), sorted->end());
    s.empirical_cdf.sorted = std::move(sorted);
    return s;
}

}  // namespace mdinf::sim
