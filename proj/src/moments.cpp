#include "mdinf/moments.hpp"

#include <cmath>
#include <string>

#include "mdinf/accum.hpp"

namespace mdinf::moments {

namespace {

constexpr double kMinShapeRho = 1e-3;

// Raw moments in extended precision; the recursion subtracts terms of
// comparable size, so the extra bits are kept until the final narrowing.
std::vector<long double> raw_moments_l(double lambda, double alpha, int max_order) {
    const long double lam = lambda;
    const long double rho = static_cast<long double>(lambda) * alpha;
    const long double erho = std::exp(rho);
    const long double emrho = std::exp(-rho);

    // C^(n)(0)
    std::vector<long double> c(static_cast<size_t>(max_order) + 1);
    c[0] = -std::expm1(-rho);
    long double neg_alpha_pow = 1.0L;  // (-alpha)^n
    for (int n = 1; n <= max_order; ++n) {
        neg_alpha_pow *= -static_cast<long double>(alpha);
        c[n] = -emrho * neg_alpha_pow - (static_cast<long double>(n) / lam) * c[n - 1];
    }

    std::vector<long double> e(static_cast<size_t>(max_order) + 1);
    e[0] = 1.0L;
    for (int n = 1; n <= max_order; ++n) {
        detail::CompensatedSum<long double> s;
        long double binom = 1.0L;  // C(n, p)
        for (int p = 1; p <= n - 1; ++p) {
            binom = binom * static_cast<long double>(n - p + 1) / static_cast<long double>(p);
            long double sign = ((n - p) % 2 == 0) ? 1.0L : -1.0L;
            s.add(sign * binom * e[n - p] * c[p]);
        }
        long double sign_n = (n % 2 == 0) ? -1.0L : 1.0L;
        e[n] = sign_n * ((erho / lam) * n * c[n - 1] - erho * s.value());
    }
    e.erase(e.begin());
    return e;
}

struct CentralMoments {
    long double mu2, mu3, mu4;
};

CentralMoments central_moments_l(double lambda, double alpha) {
    auto e = raw_moments_l(lambda, alpha, 4);
    const long double m = e[0];
    detail::CompensatedSum<long double> s2, s3, s4;
    s2.add(e[1]);
    s2.add(-m * m);
    s3.add(e[2]);
    s3.add(-3.0L * m * e[1]);
    s3.add(2.0L * m * m * m);
    s4.add(e[3]);
    s4.add(-4.0L * m * e[2]);
    s4.add(6.0L * m * m * e[1]);
    s4.add(-3.0L * m * m * m * m);
    return {s2.value(), s3.value(), s4.value()};
}

void check_shape_rho(double rho, const char* who) {
    if (!std::isfinite(rho) || rho < kMinShapeRho) {
        throw validation_error(std::string(who) + ": rho must be >= 1e-3 (cancellation guard), got " +
                               std::to_string(rho));
    }
}

}  // namespace

CDerivatives c_derivatives(const QueueParams& params, int max_order) {
    if (max_order < 1) {
        throw validation_error("c_derivatives: max_order must be >= 1");
    }
    const double rho = params.rho();
    const double emrho = std::exp(-rho);
    CDerivatives out;
    out.values.resize(static_cast<size_t>(max_order));
    out.values[0] = -std::expm1(-rho);
    double neg_alpha_pow = 1.0;
    for (int n = 1; n < max_order; ++n) {
        neg_alpha_pow *= -params.alpha();
        out.values[static_cast<size_t>(n)] =
            -emrho * neg_alpha_pow - (static_cast<double>(n) / params.lambda()) * out.values[static_cast<size_t>(n - 1)];
    }
    return out;
}

std::vector<double> raw_moments(const QueueParams& params, int max_order, bool allow_unstable) {
    if (max_order < 1) {
        throw validation_error("raw_moments: max_order must be >= 1");
    }
    if (max_order > kMaxStableOrder && !allow_unstable) {
        throw validation_error("raw_moments: orders beyond " + std::to_string(kMaxStableOrder) +
                               " lose digits to cancellation; pass allow_unstable to override");
    }
    auto e = raw_moments_l(params.lambda(), params.alpha(), max_order);
    std::vector<double> out(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
        out[i] = static_cast<double>(e[i]);
        if (!std::isfinite(out[i])) {
            throw numeric_range_error("raw_moments: E[B^" + std::to_string(i + 1) +
                                      "] exceeds double range at rho = " + std::to_string(params.rho()));
        }
    }
    return out;
}

double mean(const QueueParams& params) {
    double m = std::expm1(params.rho()) / params.lambda();
    if (!std::isfinite(m)) {
        throw numeric_range_error("mean: e^rho overflows at rho = " + std::to_string(params.rho()));
    }
    return m;
}

double variance(const QueueParams& params) {
    const long double rho = static_cast<long double>(params.lambda()) * params.alpha();
    const long double m1 = std::expm1(rho);
    const long double v = 2.0L * std::exp(rho) * (m1 - rho) - m1 * m1;
    double out = static_cast<double>(v / (static_cast<long double>(params.lambda()) * params.lambda()));
    if (!std::isfinite(out)) {
        throw numeric_range_error("variance: value exceeds double range at rho = " +
                                  std::to_string(params.rho()));
    }
    return out;
}

double variation_coeff(double rho) {
    if (!std::isfinite(rho) || rho <= 0.0) {
        throw validation_error("variation_coeff: rho must be > 0");
    }
    if (rho >= kSaturationRho) return kGammaSaturated;
    const long double m1 = std::expm1(static_cast<long double>(rho));
    const long double var = 2.0L * std::exp(static_cast<long double>(rho)) * (m1 - rho) - m1 * m1;
    return static_cast<double>(std::sqrt(var) / m1);
}

double beta1(double rho) {
    check_shape_rho(rho, "beta1");
    if (rho >= kSaturationRho) return 4.0;
    auto cm = central_moments_l(1.0, rho);
    return static_cast<double>(cm.mu3 * cm.mu3 / (cm.mu2 * cm.mu2 * cm.mu2));
}

double beta2(double rho) {
    check_shape_rho(rho, "beta2");
    if (rho >= kSaturationRho) return 9.0;
    auto cm = central_moments_l(1.0, rho);
    return static_cast<double>(cm.mu4 / (cm.mu2 * cm.mu2));
}

bool asymptotic_regime(double rho) {
    return rho >= kSaturationRho;
}

MomentReport report(const QueueParams& params, int max_order) {
    MomentReport r;
    r.lambda = params.lambda();
    r.alpha = params.alpha();
    r.rho = params.rho();
    r.raw = raw_moments(params, max_order);
    r.mean = mean(params);
    r.variance = variance(params);
    r.variation_coeff = variation_coeff(params.rho());
    r.beta1 = beta1(params.rho());
    r.beta2 = beta2(params.rho());
    r.asymptotic_regime = asymptotic_regime(params.rho());
    return r;
}

}  // namespace mdinf::moments
