#pragma once

#include <complex>

#include "mdinf/model.hpp"

namespace mdinf::transform {

struct TransformPoint {
    std::complex<double> s;
    std::complex<double> value;
};

// Busy-period Laplace transform in closed form:
//   bbar(s) = 1 + lambda^{-1} (s - (s+lambda) s / (lambda e^{-(s+lambda) alpha} + s)).
// s = 0 is the removable total-probability point and returns exactly 1.
// Throws singularity_error when the denominator magnitude falls below
// 1e-13 |s| + 1e-300 (true poles, and the removable point s = -lambda).
std::complex<double> bbar(const QueueParams& params, std::complex<double> s);

// Same transform through the general busy-period form
//   1 + lambda^{-1} (s - 1/I),  I = (1 - e^{-(s+lambda) alpha})/(s+lambda)
//                                   + e^{-rho} e^{-s alpha}/s,
// kept as an independently rounded evaluation route for consistency checks.
// Requires Re(s) > -lambda; agrees with bbar everywhere both are defined.
std::complex<double> bbar_via_general(const QueueParams& params, std::complex<double> s);

}  // namespace mdinf::transform
