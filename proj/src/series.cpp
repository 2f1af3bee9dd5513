#include "mdinf/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mdinf/accum.hpp"
#include "mdinf/erlang.hpp"

namespace mdinf::series {

namespace {

void check_tol(double tol, const char* who) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw validation_error(std::string(who) + ": tol must be positive and finite");
    }
}

// Weighted inclusion-exclusion sum shared by the CDF and PDF evaluators:
// returns e^{-rho} * sum_k (-1)^k C(n,k) e^{-k rho} g(n, lambda(x - k alpha)),
// i.e. weight(n) * F_n with the (1-e^{-rho})^n factors cancelled so the
// alternating terms never get amplified by the division.
template <typename G>
double weighted_incl_excl(double lambda, double alpha, int n, double x, G&& g) {
    const double rho = lambda * alpha;
    const int kmax = std::min<double>(n, std::floor(x / alpha));
    const double emrho = std::exp(-rho);
    detail::CompensatedSum<double> s;
    double coeff = 1.0;  // C(n,k) e^{-k rho}, alternating sign applied below
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) coeff *= emrho * static_cast<double>(n - k + 1) / static_cast<double>(k);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        s.add(sign * coeff * g(n, lambda * (x - k * alpha)));
    }
    return emrho * s.value();
}

}  // namespace

double n_customer_weight(double rho, int n) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw validation_error("n_customer_weight: rho must be > 0");
    }
    if (n < 0) {
        throw validation_error("n_customer_weight: n must be >= 0");
    }
    return std::exp(-rho) * std::pow(-std::expm1(-rho), n);
}

int truncation_terms(double rho, double tol) {
    check_tol(tol, "truncation_terms");
    const double q = -std::expm1(-rho);  // 1 - e^{-rho}
    if (q <= tol / 2.0) return 0;
    const double need = std::log(tol / 2.0) / std::log1p(-std::exp(-rho)) - 1.0;
    int n = static_cast<int>(std::ceil(need));
    if (n < 0) n = 0;
    // ceil can land one low on exact boundaries; nudge until the bound holds.
    while (std::pow(q, n + 1) > tol / 2.0) ++n;
    return n;
}

double sum_truncexp_cdf(const TruncatedExpLaw& law, int n, double t) {
    if (n < 1) throw validation_error("sum_truncexp_cdf: n must be >= 1");
    if (!(law.lambda > 0.0) || !(law.alpha > 0.0)) {
        throw validation_error("sum_truncexp_cdf: law must have positive lambda and alpha");
    }
    if (t <= 0.0) return 0.0;
    if (t >= static_cast<double>(n) * law.alpha) return 1.0;
    const double rho = law.lambda * law.alpha;
    const double q = -std::expm1(-rho);
    const double v = weighted_incl_excl(law.lambda, law.alpha, n, t,
                                        [](int m, double y) { return detail::erlang_cdf(m, y); }) /
                     (std::exp(-rho) * std::pow(q, n));
    return std::clamp(v, 0.0, 1.0);
}

double sum_truncexp_pdf(const TruncatedExpLaw& law, int n, double t) {
    if (n < 1) throw validation_error("sum_truncexp_pdf: n must be >= 1");
    if (t < 0.0 || t >= static_cast<double>(n) * law.alpha) return 0.0;
    const double rho = law.lambda * law.alpha;
    const double q = -std::expm1(-rho);
    const double lam = law.lambda;
    const double v = weighted_incl_excl(law.lambda, law.alpha, n, t,
                                        [lam](int m, double y) { return lam * detail::erlang_pdf(m, y); }) /
                     (std::exp(-rho) * std::pow(q, n));
    return v < 0.0 ? 0.0 : v;
}

SeriesResult busy_cdf(const QueueParams& params, double t, double tol) {
    check_tol(tol, "busy_cdf");
    const double rho = params.rho();
    const int nstar = truncation_terms(rho, tol);
    if (nstar > kMaxSumTerms) {
        throw resource_error("busy_cdf: geometric truncation needs " + std::to_string(nstar) +
                             " terms at rho = " + std::to_string(rho) +
                             "; use busy_cdf_closed for this regime");
    }
    SeriesResult r;
    r.terms_used = nstar;
    r.truncation_error = std::pow(-std::expm1(-rho), nstar + 1);
    r.grid_step = 0.0;
    if (t < params.alpha()) {
        r.value = 0.0;
        return r;
    }
    const double x = t - params.alpha();
    detail::CompensatedSum<double> acc;
    acc.add(std::exp(-rho));  // one-customer atom
    for (int n = 1; n <= nstar; ++n) {
        if (x >= static_cast<double>(n) * params.alpha()) {
            // F_n == 1 exactly; add the whole weight.
            acc.add(n_customer_weight(rho, n));
            continue;
        }
        acc.add(weighted_incl_excl(params.lambda(), params.alpha(), n, x,
                                   [](int m, double y) { return detail::erlang_cdf(m, y); }));
    }
    r.value = std::clamp(acc.value(), 0.0, 1.0);
    return r;
}

double busy_cdf_closed(const QueueParams& params, double t) {
    if (t < params.alpha()) return 0.0;
    const long double lam = params.lambda();
    const long double rho = params.rho();
    const long double x = static_cast<long double>(t) - params.alpha();
    const long double log_eps = -50.0L;  // term magnitudes below e^-50 cannot move the sum

    detail::CompensatedSum<long double> s;
    s.add(1.0L + lam * x);
    const int m = static_cast<int>(std::floor(static_cast<double>(x) / params.alpha()));
    for (int k = 1; k <= m; ++k) {
        const long double y = lam * (x - static_cast<long double>(k) * params.alpha());
        // term = (-1)^k e^{-k rho} y^k (y+k+1)/(k+1)!
        long double log_mag;
        if (y <= 0.0L) {
            // x/alpha landed on the lattice; rounding can push the last y a
            // hair below zero, where the term is identically 0.
            break;
        }
        log_mag = k * std::log(y) - k * rho - std::lgamma(static_cast<long double>(k) + 2.0L) +
                  std::log(y + k + 1.0L);
        if (log_mag < log_eps) {
            // Terms are unimodal in k; once past the peak they only shrink.
            if (y < static_cast<long double>(k)) break;
            continue;
        }
        const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
        s.add(sign * std::exp(log_mag));
    }
    const long double v = std::exp(-rho) * s.value();
    return std::clamp(static_cast<double>(v), 0.0, 1.0);
}

SeriesResult busy_pdf_continuous(const QueueParams& params, double t, double tol) {
    check_tol(tol, "busy_pdf_continuous");
    const double rho = params.rho();
    const int nstar = truncation_terms(rho, tol);
    if (nstar > kMaxSumTerms) {
        throw resource_error("busy_pdf_continuous: geometric truncation needs " +
                             std::to_string(nstar) + " terms at rho = " + std::to_string(rho));
    }
    SeriesResult r;
    r.terms_used = nstar;
    r.truncation_error = std::pow(-std::expm1(-rho), nstar + 1);
    r.grid_step = 0.0;
    if (t < params.alpha()) {
        r.value = 0.0;
        return r;
    }
    const double x = t - params.alpha();
    const double lam = params.lambda();
    detail::CompensatedSum<double> acc;
    for (int n = 1; n <= nstar; ++n) {
        if (x >= static_cast<double>(n) * params.alpha()) continue;  // outside support of S_n
        acc.add(weighted_incl_excl(lam, params.alpha(), n, x,
                                   [lam](int m, double y) { return lam * detail::erlang_pdf(m, y); }));
    }
    r.value = std::max(acc.value(), 0.0);
    return r;
}

std::pair<double, double> busy_atom(const QueueParams& params) {
    return {params.alpha(), std::exp(-params.rho())};
}

double quantile(const QueueParams& params, double p, double tol) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw validation_error("quantile: p must lie in (0, 1)");
    }
    check_tol(tol, "quantile");
    if (p <= std::exp(-params.rho())) return params.alpha();

    double lo = params.alpha();
    double hi = 2.0 * params.alpha();
    while (busy_cdf_closed(params, hi) < p) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) {
            throw numeric_range_error("quantile: bracket search overflow; p too close to 1");
        }
    }
    while (hi - lo > tol) {
        const double mid = lo + (hi - lo) / 2.0;
        if (busy_cdf_closed(params, mid) >= p) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

MixedCdf busy_mixed_cdf(const QueueParams& params) {
    MixedCdf f;
    f.atom_location = params.alpha();
    f.atom_mass = std::exp(-params.rho());
    f.support_lower = params.alpha();
    const QueueParams p = params;
    const double atom = f.atom_mass;
    f.continuous_part = [p, atom](double t) {
        if (t < p.alpha()) return 0.0;
        return std::max(busy_cdf_closed(p, t) - atom, 0.0);
    };
    return f;
}

SeriesResult busy_cdf_grid(const QueueParams& params, double t, double tol) {
    GridEvaluator ev(params, std::max(t, params.alpha()), tol);
    SeriesResult r;
    r.value = ev.cdf(t);
    r.terms_used = ev.terms_used();
    r.truncation_error = ev.truncation_error();
    r.grid_step = ev.grid_step();
    return r;
}

GridEvaluator::GridEvaluator(const QueueParams& params, double t_max, double tol, int taps_per_alpha)
    : lambda_(params.lambda()), alpha_(params.alpha()), rho_(params.rho()) {
    check_tol(tol, "GridEvaluator");
    if (taps_per_alpha < 8) {
        throw validation_error("GridEvaluator: taps_per_alpha must be >= 8");
    }
    if (!std::isfinite(t_max) || t_max < alpha_) {
        throw validation_error("GridEvaluator: t_max must be finite and >= alpha");
    }
    h_ = alpha_ / taps_per_alpha;
    x_max_ = std::max(t_max - alpha_, alpha_) + h_;
    const auto j_max = static_cast<size_t>(std::ceil(x_max_ / h_)) + 1;
    x_max_ = static_cast<double>(j_max) * h_;

    const int nstar = truncation_terms(rho_, tol);
    const double q = -std::expm1(-rho_);

    // Truncated-exponential density sampled on the taps, trapezoid-weighted
    // over [0, alpha] (left limit at alpha) and normalized to unit mass so
    // repeated convolution cannot drift the total.
    const int taps = taps_per_alpha;
    std::vector<double> ker(static_cast<size_t>(taps) + 1);
    for (int m = 0; m <= taps; ++m) {
        double w = (m == 0 || m == taps) ? 0.5 : 1.0;
        ker[static_cast<size_t>(m)] = w * h_ * lambda_ * std::exp(-lambda_ * m * h_) / q;
    }
    double ker_mass = 0.0;
    for (double w : ker) ker_mass += w;
    for (double& w : ker) w /= ker_mass;

    // F_1 exactly on the nodes.
    std::vector<double> f(j_max + 1), g(j_max + 1);
    for (size_t j = 0; j <= j_max; ++j) {
        const double x = static_cast<double>(j) * h_;
        f[j] = (x >= alpha_) ? 1.0 : -std::expm1(-lambda_ * x) / q;
    }

    accum_.assign(j_max + 1, 0.0);
    double weight = std::exp(-rho_) * q;  // w_1
    double tail_after = std::pow(q, 2);   // sum of weights beyond current n
    for (size_t j = 0; j <= j_max; ++j) accum_[j] += weight * f[j];
    terms_used_ = 1;

    for (int n = 2; n <= nstar; ++n) {
        // F_n = kernel * F_{n-1}
#pragma omp parallel for schedule(static)
        for (long long j = 0; j <= static_cast<long long>(j_max); ++j) {
            const long long mlim = std::min<long long>(taps, j);
            double s = 0.0;
            for (long long m = 0; m <= mlim; ++m) {
                s += ker[static_cast<size_t>(m)] * f[static_cast<size_t>(j - m)];
            }
            g[static_cast<size_t>(j)] = s;
        }
        std::swap(f, g);
        weight *= q;
        tail_after *= q;
        for (size_t j = 0; j <= j_max; ++j) accum_[j] += weight * f[j];
        terms_used_ = n;
        // F_m <= F_n pointwise for m > n, so the whole remainder on this
        // grid is below tail_after * F_n(x_max).
        if (tail_after * f[j_max] < tol / 4.0) break;
    }
    // Remainder over the evaluation range: sum_{m>n} w_m F_m(x) is bounded
    // pointwise by tail_after * F_n(x_max), tighter than the bare weight tail.
    truncation_error_ = tail_after * f[j_max];
}

double GridEvaluator::cdf(double t) const {
    if (!std::isfinite(t)) throw validation_error("GridEvaluator::cdf: t must be finite");
    if (t < alpha_) return 0.0;
    const double x = t - alpha_;
    if (x > x_max_) {
        throw validation_error("GridEvaluator::cdf: t beyond precomputed range");
    }
    const double pos = x / h_;
    const auto j = static_cast<size_t>(pos);
    const double frac = pos - static_cast<double>(j);
    const double a = (j + 1 < accum_.size())
                         ? accum_[j] + frac * (accum_[j + 1] - accum_[j])
                         : accum_.back();
    return std::min(std::exp(-rho_) + a, 1.0);
}

}  // namespace mdinf::series
