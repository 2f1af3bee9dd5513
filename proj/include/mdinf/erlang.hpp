#pragma once

#include <cstdint>

namespace mdinf::detail {

// log of the Poisson pmf e^{-x} x^k / k!
double log_poisson_pmf(std::int64_t k, double x);

double poisson_pmf(std::int64_t k, double x);

// P(Gamma(n, 1) <= x) for integer shape n >= 1, evaluated through the
// Poisson tail identity P(Gamma_n <= x) = P(Poisson(x) >= n). Summation is
// anchored at the dominant term and recursed by pmf ratios, so both tails
// keep full relative accuracy for n up to several thousand.
double erlang_cdf(std::int64_t n, double x);

// Density of Gamma(n, 1) at x: equals poisson_pmf(n-1, x).
double erlang_pdf(std::int64_t n, double x);

}  // namespace mdinf::detail
