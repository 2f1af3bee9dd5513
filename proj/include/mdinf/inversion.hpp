#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "mdinf/model.hpp"

namespace mdinf::inversion {

// User-facing knobs of the Platzman-Ammons-Bartholdi tail approximation.
// delta_a disturbs the abscissa (accuracy), delta_p the result (precision):
// the returned tau is guaranteed to satisfy
//   P[B >= t + delta_a] - delta_p <= tau <= P[B > t - delta_a] + delta_p.
struct PabConfig {
    double delta_a = 0.0;
    double delta_p = 0.0;
    int l = 3;  // bracket exponent: U covers all but 10^{-l} delta_p of mass
    std::int64_t max_terms = 2'000'000;
};

struct PabDerived {
    double k_const = 0.0;        // K = ln(2/delta_p)
    double d_const = 0.0;        // D = delta_a / sqrt(2K)
    double omega = 0.0;          // 2 pi / (U - L + 2 delta_a)
    std::int64_t n_terms = 0;    // N = ceil(2K / (omega delta_a))
    double damping_base = 0.0;   // e^{-D^2 omega^2 / 2}
    double upper = 0.0;          // U
    double lower = 0.0;          // L = alpha
};

struct TailResult {
    double tau = 0.0;
    std::int64_t terms_evaluated = 0;
    bool truncated_by_underflow = false;  // damping factor fell below 1e-300
};

// L = alpha; U = mean + sqrt(variance / delta_p * 10^l), the Chebyshev-based
// point beyond which at most 10^{-l} delta_p of mass remains.
std::pair<double, double> select_bracket(const QueueParams& params, const PabConfig& config);

// All internal constants; throws resource_error when the required N exceeds
// config.max_terms (the message names the N needed).
PabDerived derive(const QueueParams& params, const PabConfig& config);

// tau ~= P[B > t] by the damped trigonometric sum
//   tau = (U-t+dA)/(U-L+2dA)
//         + sum_{n=1}^N damping^{n^2}/(pi n) Im{(beta^n - gamma^n) bbar(i omega n)}.
// Terms are summed in fixed 4096-term chunks, each compensated, chunks
// combined in ascending order, so the value is bit-identical for any worker
// count.
TailResult tail_detailed(const QueueParams& params, const PabConfig& config, double t);

double tail(const QueueParams& params, const PabConfig& config, double t);

// Serial unchunked long-double evaluation of the same sum; reference for
// the summation order and the benchmark baseline.
double tail_reference(const QueueParams& params, const PabConfig& config, double t);

// 1 - tau clamped to [0,1]. Without a series oracle the band is the bare
// (delta_p, delta_p) — the smoothing slack B(t +- delta_a) - B(t) exists but
// is unquantified. The oracle-aware overload folds that slack in, giving the
// full guaranteed band.
CdfEstimate cdf(const QueueParams& params, const PabConfig& config, double t);

CdfEstimate cdf(const QueueParams& params, const PabConfig& config, double t,
                const std::function<double(double)>& series_cdf);

}  // namespace mdinf::inversion
