#include "mdinf/model.hpp"

#include <cmath>
#include <string>

namespace mdinf {

QueueParams make_params(double lambda, double alpha) {
    if (!std::isfinite(lambda) || !std::isfinite(alpha)) {
        throw validation_error("make_params: lambda and alpha must be finite");
    }
    if (lambda <= 0.0) {
        throw validation_error("make_params: lambda must be > 0, got " + std::to_string(lambda));
    }
    if (alpha <= 0.0) {
        throw validation_error("make_params: alpha must be > 0, got " + std::to_string(alpha));
    }
    return QueueParams(lambda, alpha, lambda * alpha);
}

double service_cdf(const QueueParams& params, double t) {
    return (t >= params.alpha()) ? 1.0 : 0.0;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::pab: return "pab";
        case Method::chebyshev_lower: return "chebyshev_lower";
        case Method::envelope_lower: return "envelope_lower";
        case Method::envelope_upper: return "envelope_upper";
        case Method::exp_approx: return "exp_approx";
        case Method::simulation: return "simulation";
    }
    return "unknown";
}

}  // namespace mdinf
