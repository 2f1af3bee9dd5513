#pragma once

#include <utility>

#include "mdinf/model.hpp"

namespace mdinf::bounds {

enum class BoundKind {
    envelope_lower,   // e^{-rho} G(t)
    envelope_upper,   // G(t)
    chebyshev_lower,  // 1 - VAR/(t - mean)^2 in its lambda-scaled form
    exp_approx,       // 1 - e^{-lambda e^{-rho} t}
};

struct BoundValue {
    double t = 0.0;
    double value = 0.0;
    BoundKind kind = BoundKind::envelope_lower;
    bool valid = true;  // informative at this t (chebyshev: t > mean and value >= 0)
};

// Step envelope e^{-rho} G(t) <= B(t) <= G(t) with G the service CDF.
std::pair<double, double> envelope(const QueueParams& params, double t);

// One-sided Chebyshev-style lower bound
//   B(t) >= 1 - (e^{2 rho} - 2 rho e^rho - 1)/(1 + lambda t - e^rho)^2,
// informative only beyond the mean; negative values are trivially true.
BoundValue chebyshev_lower(const QueueParams& params, double t);

// Large-rho exponential approximation B(t) ~= 1 - e^{-lambda e^{-rho} t};
// an approximation rather than a bound, reliable once rho exceeds ~10.
double exp_approx(const QueueParams& params, double t);

}  // namespace mdinf::bounds
