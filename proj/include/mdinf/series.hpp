#pragma once

#include <utility>
#include <vector>

#include "mdinf/model.hpp"

namespace mdinf::series {

// Exponential(lambda) conditioned on being < alpha; the per-customer
// contribution law of the busy-period decomposition.
struct TruncatedExpLaw {
    double lambda = 1.0;
    double alpha = 1.0;
};

struct SeriesResult {
    double value = 0.0;
    int terms_used = 0;
    double truncation_error = 0.0;  // geometric tail bound (1-e^{-rho})^{terms_used+1}
    double grid_step = 0.0;         // 0 for analytic routes
};

inline constexpr double kDefaultTol = 1e-6;
inline constexpr int kDefaultTapsPerAlpha = 1000;
inline constexpr int kMaxSumTerms = 2'000'000;

// e^{-rho}(1-e^{-rho})^n: probability the busy period consists of n+1
// customers.
double n_customer_weight(double rho, int n);

// Smallest N with (1-e^{-rho})^{N+1} <= tol/2.
int truncation_terms(double rho, double tol);

// CDF of a sum of n independent truncated-exponential variables, through the
// inclusion-exclusion form
//   F_n(t) = sum_k (-1)^k C(n,k) e^{-k rho} P(Gamma_n <= lambda(t-k alpha))
//            / (1-e^{-rho})^n.
// Exact 0 for t <= 0 and 1 for t >= n alpha. Full accuracy where the busy-
// period evaluators use it; the standalone value loses digits once n·rho is
// large and t >> alpha (the alternating terms then dwarf the result).
double sum_truncexp_cdf(const TruncatedExpLaw& law, int n, double t);

// Density of the same sum (lambda times an alternating Erlang-density
// combination).
double sum_truncexp_pdf(const TruncatedExpLaw& law, int n, double t);

// Busy-period CDF B(t).
//
// Three independent routes are provided:
//  - busy_cdf: analytic term-by-term sum over customer counts; truncation
//    error bounded by the geometric tail, no quadrature error. Canonical.
//  - busy_cdf_grid / GridEvaluator: trapezoid-grid convolution march of the
//    truncated-exponential kernel (step alpha/1000 by default); kept as an
//    independent numerical route and cross-checked in tests.
//  - busy_cdf_closed: closed renewal form, cheap at any t; used for
//    quantiles and wide-range scans.
SeriesResult busy_cdf(const QueueParams& params, double t, double tol = kDefaultTol);

SeriesResult busy_cdf_grid(const QueueParams& params, double t, double tol = kDefaultTol);

// Closed form: with x = t - alpha >= 0 and y_k = lambda(x - k alpha),
//   B(t) = e^{-rho} [1 + y_0 + sum_{k>=1} (-1)^k e^{-k rho}
//                                 y_k^k (y_k + k + 1)/(k+1)!],
// summed over k <= floor(x/alpha). Alternating growth limits usable range to
// lambda e^{-rho} (t - alpha) ≲ 30, ample for every tabulated regime.
double busy_cdf_closed(const QueueParams& params, double t);

// Continuous density part (the atom at alpha is reported separately);
// right-continuous at alpha with value lambda e^{-rho}.
SeriesResult busy_pdf_continuous(const QueueParams& params, double t, double tol = kDefaultTol);

// (alpha, e^{-rho}).
std::pair<double, double> busy_atom(const QueueParams& params);

// Smallest t with B(t) >= p; exactly alpha for p <= e^{-rho}.
double quantile(const QueueParams& params, double p, double tol = 1e-9);

// The full distribution object: atom at alpha plus continuous part.
MixedCdf busy_mixed_cdf(const QueueParams& params);

// Precomputed accumulation of the grid-convolution route on [alpha, t_max]:
// builds each F_n by convolving with the kernel once, accumulates the
// geometric mixture, then answers point queries by linear interpolation.
class GridEvaluator {
public:
    GridEvaluator(const QueueParams& params, double t_max, double tol = kDefaultTol,
                  int taps_per_alpha = kDefaultTapsPerAlpha);

    // Full CDF including the atom; t must lie within [0, t_max].
    double cdf(double t) const;

    double grid_step() const { return h_; }
    int terms_used() const { return terms_used_; }
    double truncation_error() const { return truncation_error_; }

private:
    double lambda_;
    double alpha_;
    double rho_;
    double h_;
    double x_max_;
    int terms_used_ = 0;
    double truncation_error_ = 0.0;
    std::vector<double> accum_;  // sum_n w_n F_n at x_j = j h
};

}  // namespace mdinf::series
