#pragma once

#include <vector>

#include "mdinf/model.hpp"

namespace mdinf::moments {

// Derivatives at the origin of C(s) = integral of (-t)^n weight over the
// service window; entry n holds C^(n)(0).
struct CDerivatives {
    std::vector<double> values;
};

struct MomentReport {
    double lambda = 0.0;
    double alpha = 0.0;
    double rho = 0.0;
    std::vector<double> raw;  // raw[n-1] = E[B^n]
    double mean = 0.0;
    double variance = 0.0;
    double variation_coeff = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    bool asymptotic_regime = false;
};

inline constexpr int kDefaultMaxOrder = 4;

// The backward recursion loses digits as the order grows; beyond this order
// results are refused unless the caller opts in.
inline constexpr int kMaxStableOrder = 10;

// Past this traffic intensity the shape coefficients are numerically
// indistinguishable from their exponential limits in double precision, so
// they are reported as saturated display values (see variation_coeff).
inline constexpr double kSaturationRho = 20.0;

// Saturated variation coefficient: 1 - 1e-8, kept strictly below 1 because
// gamma_B < 1 holds for every finite rho.
inline constexpr double kGammaSaturated = 0.99999999;

// C^(0)(0)..C^(max_order-1)(0) by the forward recursion
// C^(n) = -e^{-rho}(-alpha)^n - (n/lambda) C^(n-1).
CDerivatives c_derivatives(const QueueParams& params, int max_order);

// E[B^n] for n = 1..max_order via the Leibniz-style recursion fed by
// c_derivatives. Throws numeric_range_error if a moment leaves double range,
// and validation_error for max_order > kMaxStableOrder unless allow_unstable.
std::vector<double> raw_moments(const QueueParams& params, int max_order,
                                bool allow_unstable = false);

// (e^rho - 1)/lambda.
double mean(const QueueParams& params);

// (e^{2 rho} - 2 rho e^rho - 1)/lambda^2, evaluated in the cancellation-free
// arrangement 2 e^rho (expm1(rho) - rho) - expm1(rho)^2.
double variance(const QueueParams& params);

// gamma_B = sd/mean; depends on rho only. Returns kGammaSaturated with the
// asymptotic flag for rho >= kSaturationRho.
double variation_coeff(double rho);

// Squared skewness mu3^2 / mu2^3; limit 4. Requires rho >= 1e-3.
double beta1(double rho);

// Kurtosis mu4 / mu2^2; limit 9. Requires rho >= 1e-3.
double beta2(double rho);

bool asymptotic_regime(double rho);

MomentReport report(const QueueParams& params, int max_order = kDefaultMaxOrder);

}  // namespace mdinf::moments
