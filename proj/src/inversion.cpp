#include "mdinf/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "mdinf/accum.hpp"
#include "mdinf/moments.hpp"
#include "mdinf/transform.hpp"

namespace mdinf::inversion {

namespace {

constexpr std::int64_t kChunk = 4096;
constexpr double kUnderflow = 1e-300;

void check_config(const PabConfig& config) {
    if (!(config.delta_a > 0.0) || !std::isfinite(config.delta_a)) {
        throw validation_error("pab: delta_a must be positive and finite");
    }
    if (!(config.delta_p > 0.0) || !(config.delta_p < 0.5)) {
        throw validation_error("pab: delta_p must lie in (0, 1/2)");
    }
    if (config.l < 1) {
        throw validation_error("pab: l must be a positive integer");
    }
    if (config.max_terms < 1) {
        throw validation_error("pab: max_terms must be >= 1");
    }
}

// First n at which damping_base^{n^2} underflows below kUnderflow, or
// n_terms + 1 if it never does within the sum.
std::int64_t underflow_cut(const PabDerived& d) {
    const double c = d.d_const * d.d_const * d.omega * d.omega / 2.0;  // exponent coefficient
    if (c <= 0.0) return d.n_terms + 1;
    const double n_cut = std::sqrt(-std::log(kUnderflow) / c);
    if (n_cut >= static_cast<double>(d.n_terms) + 1.0) return d.n_terms + 1;
    return static_cast<std::int64_t>(n_cut) + 1;
}

}  // namespace

std::pair<double, double> select_bracket(const QueueParams& params, const PabConfig& config) {
    check_config(config);
    const double m = moments::mean(params);
    const double var = moments::variance(params);
    const double upper = m + std::sqrt(var / config.delta_p * std::pow(10.0, config.l));
    if (!std::isfinite(upper)) {
        throw numeric_range_error("pab: bracket upper end overflows");
    }
    return {params.alpha(), upper};
}

PabDerived derive(const QueueParams& params, const PabConfig& config) {
    const auto [lower, upper] = select_bracket(params, config);
    PabDerived d;
    d.lower = lower;
    d.upper = upper;
    d.k_const = std::log(2.0 / config.delta_p);
    d.d_const = config.delta_a / std::sqrt(2.0 * d.k_const);
    d.omega = 2.0 * std::numbers::pi / (upper - lower + 2.0 * config.delta_a);
    const double n_real = std::ceil(2.0 * d.k_const / (d.omega * config.delta_a));
    if (!(n_real >= 1.0) || n_real > static_cast<double>(config.max_terms)) {
        throw resource_error("pab: required N = " + std::to_string(n_real) + " exceeds max_terms = " +
                             std::to_string(config.max_terms));
    }
    d.n_terms = static_cast<std::int64_t>(n_real);
    d.damping_base = std::exp(-d.d_const * d.d_const * d.omega * d.omega / 2.0);
    return d;
}

TailResult tail_detailed(const QueueParams& params, const PabConfig& config, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw validation_error("pab tail: t must be positive and finite");
    }
    const PabDerived d = derive(params, config);
    const double theta_beta = (d.upper + config.delta_a) * d.omega;
    const double theta_gamma = t * d.omega;
    const double damp_coeff = d.d_const * d.d_const * d.omega * d.omega / 2.0;

    const std::int64_t cut = underflow_cut(d);
    const std::int64_t n_eff = std::min(d.n_terms, cut - 1);
    const std::int64_t n_chunks = (n_eff + kChunk - 1) / kChunk;

    std::vector<double> partial(static_cast<size_t>(n_chunks), 0.0);
    bool failed = false;
    std::string fail_what;

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < n_chunks; ++c) {
        if (failed) continue;
        try {
            const std::int64_t first = c * kChunk + 1;
            const std::int64_t last = std::min(n_eff, (c + 1) * kChunk);
            detail::CompensatedSum<double> s;
            for (std::int64_t n = first; n <= last; ++n) {
                const double nd = static_cast<double>(n);
                const double damp = std::exp(-damp_coeff * nd * nd);
                const std::complex<double> osc =
                    std::polar(1.0, theta_beta * nd) - std::polar(1.0, theta_gamma * nd);
                const std::complex<double> b =
                    transform::bbar(params, std::complex<double>(0.0, d.omega * nd));
                s.add(damp / (std::numbers::pi * nd) * std::imag(osc * b));
            }
            partial[static_cast<size_t>(c)] = s.value();
        } catch (const std::exception& e) {
#pragma omp critical
            {
                failed = true;
                fail_what = e.what();
            }
        }
    }
    if (failed) {
        throw singularity_error("pab tail: " + fail_what);
    }

    detail::CompensatedSum<double> total;
    total.add((d.upper - t + config.delta_a) / (d.upper - d.lower + 2.0 * config.delta_a));
    for (double p : partial) total.add(p);

    TailResult r;
    r.tau = total.value();
    r.terms_evaluated = n_eff;
    r.truncated_by_underflow = n_eff < d.n_terms;
    return r;
}

double tail(const QueueParams& params, const PabConfig& config, double t) {
    return tail_detailed(params, config, t).tau;
}

double tail_reference(const QueueParams& params, const PabConfig& config, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw validation_error("pab tail_reference: t must be positive and finite");
    }
    const PabDerived d = derive(params, config);
    const double theta_beta = (d.upper + config.delta_a) * d.omega;
    const double damp_coeff = d.d_const * d.d_const * d.omega * d.omega / 2.0;

    long double acc = (d.upper - t + config.delta_a) / (d.upper - d.lower + 2.0 * config.delta_a);
    for (std::int64_t n = 1; n <= d.n_terms; ++n) {
        const double nd = static_cast<double>(n);
        const double damp = std::exp(-damp_coeff * nd * nd);
        if (damp < kUnderflow) break;
        const std::complex<double> osc =
            std::polar(1.0, theta_beta * nd) - std::polar(1.0, t * d.omega * nd);
        const std::complex<double> b = transform::bbar(params, std::complex<double>(0.0, d.omega * nd));
        acc += static_cast<long double>(damp / (std::numbers::pi * nd) * std::imag(osc * b));
    }
    return static_cast<double>(acc);
}

CdfEstimate cdf(const QueueParams& params, const PabConfig& config, double t) {
    CdfEstimate e;
    e.t = t;
    e.method = Method::pab;
    e.value = std::clamp(1.0 - tail(params, config, t), 0.0, 1.0);
    e.error_band = {config.delta_p, config.delta_p};
    return e;
}

CdfEstimate cdf(const QueueParams& params, const PabConfig& config, double t,
                const std::function<double(double)>& series_cdf) {
    CdfEstimate e = cdf(params, config, t);
    const double mid = series_cdf(t);
    const double up = series_cdf(t + config.delta_a);
    const double down = series_cdf(t - config.delta_a);
    e.error_band = {config.delta_p + std::max(up - mid, 0.0),
                    config.delta_p + std::max(mid - down, 0.0)};
    return e;
}

}  // namespace mdinf::inversion
