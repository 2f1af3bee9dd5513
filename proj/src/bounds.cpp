#include "mdinf/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mdinf/moments.hpp"

namespace mdinf::bounds {

std::pair<double, double> envelope(const QueueParams& params, double t) {
    const double g = service_cdf(params, t);
    return {std::exp(-params.rho()) * g, g};
}

BoundValue chebyshev_lower(const QueueParams& params, double t) {
    if (!std::isfinite(t)) {
        throw validation_error("chebyshev_lower: t must be finite");
    }
    const double rho = params.rho();
    const long double num =
        std::exp(2.0L * rho) - 2.0L * static_cast<long double>(rho) * std::exp(static_cast<long double>(rho)) - 1.0L;
    if (!std::isfinite(static_cast<double>(num))) {
        throw numeric_range_error("chebyshev_lower: e^{2 rho} overflows at rho = " + std::to_string(rho));
    }
    const long double den_root = 1.0L + static_cast<long double>(params.lambda()) * t -
                                 std::exp(static_cast<long double>(rho));
    BoundValue b;
    b.t = t;
    b.kind = BoundKind::chebyshev_lower;
    if (den_root == 0.0L) {
        b.value = -std::numeric_limits<double>::infinity();
        b.valid = false;
        return b;
    }
    b.value = static_cast<double>(1.0L - num / (den_root * den_root));
    const double m = moments::mean(params);
    b.valid = (t > m) && (b.value >= 0.0);
    return b;
}

double exp_approx(const QueueParams& params, double t) {
    if (t < 0.0) {
        throw validation_error("exp_approx: t must be >= 0");
    }
    return -std::expm1(-params.lambda() * std::exp(-params.rho()) * t);
}

}  // namespace mdinf::bounds
