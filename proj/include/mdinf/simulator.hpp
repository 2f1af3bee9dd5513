#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mdinf/model.hpp"

namespace mdinf::sim {

struct SimConfig {
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    int workers = 0;  // 0 = library default (all available)
};

// Right-continuous empirical CDF over a sorted sample vector.
struct EmpiricalCdf {
    std::shared_ptr<const std::vector<double>> sorted;
    double operator()(double t) const;
};

struct SimSummary {
    std::int64_t n = 0;
    double mean = 0.0;
    double variance = 0.0;  // unbiased (n-1)
    double std_error_mean = 0.0;
    double atom_fraction = 0.0;  // samples exactly equal to alpha
    double min = 0.0;
    double max = 0.0;
    EmpiricalCdf empirical_cdf;
    std::shared_ptr<const std::vector<double>> samples;  // generation order
};

namespace detail {

std::uint64_t mix64(std::uint64_t z);

// Counter-based uniform stream: every draw is a pure function of
// (seed, sample index, draw index), so any parallel schedule reproduces the
// same sample vector bit for bit.
struct ExpStream {
    std::uint64_t seed_hash;
    std::uint64_t index;
    std::uint64_t draw = 0;
    double lambda;

    double operator()();
};

}  // namespace detail

// One busy period: start the first service, then accumulate Poisson arrival
// gaps; each arrival strictly before the current frontier extends the
// frontier to its own departure time; the first arrival at or past the
// frontier closes the period.
//   end <- alpha; t <- 0
//   loop: t += E ~ Exp(lambda); if t >= end return end; else end <- t + alpha
// A single-customer period returns alpha exactly (bitwise), which is what
// makes the atom fraction countable by equality.
template <typename ExpSource>
double sample_busy_period(const QueueParams& params, ExpSource&& draw_exp) {
    const double alpha = params.alpha();
    double end = alpha;
    double t = 0.0;
    for (;;) {
        t += draw_exp();
        if (t >= end) return end;
        end = t + alpha;
    }
}

// n_samples independent busy periods from the counter-based stream; the
// sample multiset depends only on (seed, n_samples), never on workers.
SimSummary run(const QueueParams& params, const SimConfig& config);

}  // namespace mdinf::sim
