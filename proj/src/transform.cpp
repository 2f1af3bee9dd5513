#include "mdinf/transform.hpp"

#include <cmath>

namespace mdinf::transform {

namespace {

// (1 - e^{-w a})/w with a series fallback near w = 0.
std::complex<double> expm1_ratio(std::complex<double> w, double a) {
    if (std::abs(w) * a < 1e-4) {
        std::complex<double> wa = w * a;
        return a * (1.0 - wa / 2.0 + wa * wa / 6.0 - wa * wa * wa / 24.0);
    }
    return (1.0 - std::exp(-w * a)) / w;
}

}  // namespace

std::complex<double> bbar(const QueueParams& params, std::complex<double> s) {
    if (s == std::complex<double>(0.0, 0.0)) return {1.0, 0.0};
    const double lam = params.lambda();
    const double al = params.alpha();
    const std::complex<double> den = lam * std::exp(-(s + lam) * al) + s;
    if (std::abs(den) < 1e-13 * std::abs(s) + 1e-300) {
        throw singularity_error("bbar: transform denominator vanishes near s = (" +
                                std::to_string(s.real()) + ", " + std::to_string(s.imag()) + ")");
    }
    return 1.0 + (s - (s + lam) * s / den) / lam;
}

std::complex<double> bbar_via_general(const QueueParams& params, std::complex<double> s) {
    const double lam = params.lambda();
    const double al = params.alpha();
    if (s.real() <= -lam) {
        throw validation_error("bbar_via_general: requires Re(s) > -lambda");
    }
    if (s == std::complex<double>(0.0, 0.0)) return {1.0, 0.0};
    const std::complex<double> integral =
        expm1_ratio(s + lam, al) + std::exp(-params.rho()) * std::exp(-s * al) / s;
    const std::complex<double> v = 1.0 + (s - 1.0 / integral) / lam;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw singularity_error("bbar_via_general: evaluation degenerated near a pole");
    }
    return v;
}

}  // namespace mdinf::transform
