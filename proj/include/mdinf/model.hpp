#pragma once

#include <functional>
#include <utility>

#include "mdinf/errors.hpp"

namespace mdinf {

// Arrival rate lambda, constant service time alpha, traffic intensity
// rho = lambda*alpha. rho is always derived, never set independently.
class QueueParams {
public:
    double lambda() const { return lambda_; }
    double alpha() const { return alpha_; }
    double rho() const { return rho_; }

    friend QueueParams make_params(double lambda, double alpha);

private:
    QueueParams(double lambda, double alpha, double rho)
        : lambda_(lambda), alpha_(alpha), rho_(rho) {}

    double lambda_;
    double alpha_;
    double rho_;
};

// Validates lambda > 0, alpha > 0, both finite; throws validation_error.
QueueParams make_params(double lambda, double alpha);

// Deterministic service distribution: step from 0 to 1 at alpha,
// right-continuous.
double service_cdf(const QueueParams& params, double t);

// CDF with one atom plus a continuous part. Right-continuous; the value at
// the atom location includes the atom mass.
struct MixedCdf {
    double atom_location = 0.0;
    double atom_mass = 0.0;
    std::function<double(double)> continuous_part;  // nondecreasing, in [0, 1-atom_mass]
    double support_lower = 0.0;

    double operator()(double t) const {
        if (t < support_lower) return 0.0;
        double v = (t >= atom_location) ? atom_mass : 0.0;
        if (continuous_part) v += continuous_part(t);
        return v;
    }
};

enum class Method {
    series,
    pab,
    chebyshev_lower,
    envelope_lower,
    envelope_upper,
    exp_approx,
    simulation,
};

const char* method_name(Method m);

// One estimate of B(t) by one method, with its guaranteed error band.
// error_band = (downward slack, upward slack): the true value lies within
// [value - band.first, value + band.second]. Infinite where no guarantee
// exists. Values may fall outside [0,1] only for chebyshev_lower, which is a
// bound rather than a probability.
struct CdfEstimate {
    double t = 0.0;
    double value = 0.0;
    Method method = Method::series;
    std::pair<double, double> error_band{0.0, 0.0};
};

}  // namespace mdinf
