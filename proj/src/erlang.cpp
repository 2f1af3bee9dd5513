#include "mdinf/erlang.hpp"

#include <cmath>

namespace mdinf::detail {

namespace {
constexpr double kLogUnderflow = -745.0;  // below this, exp() is 0.0
constexpr double kRelStop = 1e-20;
}  // namespace

double log_poisson_pmf(std::int64_t k, double x) {
    if (k == 0) return -x;
    return static_cast<double>(k) * std::log(x) - x - std::lgamma(static_cast<double>(k) + 1.0);
}

double poisson_pmf(std::int64_t k, double x) {
    if (x == 0.0) return k == 0 ? 1.0 : 0.0;
    double lp = log_poisson_pmf(k, x);
    return lp < kLogUnderflow ? 0.0 : std::exp(lp);
}

double erlang_cdf(std::int64_t n, double x) {
    if (x <= 0.0) return 0.0;
    if (n <= 0) return 1.0;

    if (x >= static_cast<double>(n)) {
        // Right of the mode: 1 - P(Poisson(x) <= n-1). The complement series
        // starts at j = n-1 and shrinks going down (ratio j/x < 1).
        double lp = log_poisson_pmf(n - 1, x);
        if (lp < kLogUnderflow) return 1.0;
        double term = std::exp(lp);
        double sum = term;
        for (std::int64_t j = n - 1; j >= 1; --j) {
            term *= static_cast<double>(j) / x;
            sum += term;
            if (term <= kRelStop * sum) break;  // <=: both sides can underflow to 0
        }
        double v = 1.0 - sum;
        return v < 0.0 ? 0.0 : v;
    }

    // Left of the mode: sum P(Poisson(x) >= n) upward (ratio x/(j+1) < 1).
    double lp = log_poisson_pmf(n, x);
    if (lp < kLogUnderflow) return 0.0;
    double term = std::exp(lp);
    double sum = term;
    for (std::int64_t j = n;; ++j) {
        term *= x / static_cast<double>(j + 1);
        sum += term;
        if (term <= kRelStop * sum) break;  // <=: both sides can underflow to 0
    }
    return sum > 1.0 ? 1.0 : sum;
}

double erlang_pdf(std::int64_t n, double x) {
    if (x < 0.0 || n <= 0) return 0.0;
    return poisson_pmf(n - 1, x);
}

}  // namespace mdinf::detail
