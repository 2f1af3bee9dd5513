#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <utility>

#include <CLI11.hpp>

#include "formats.hpp"
#include "mdinf/bounds.hpp"
#include "mdinf/errors.hpp"
#include "mdinf/inversion.hpp"
#include "mdinf/model.hpp"
#include "mdinf/moments.hpp"
#include "mdinf/series.hpp"
#include "mdinf/simulator.hpp"
#include "mdinf/transform.hpp"

namespace mdinf::cli {
namespace {

struct CommonOpts {
    double lambda = 1.0;
    double alpha = 1.0;
    std::string format = "pretty";
    int digits = 9;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--lambda", o.lambda, "arrival rate");
    cmd->add_option("--alpha", o.alpha, "service time");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json-lines", "pretty"}));
    cmd->add_option("--digits", o.digits, "significant digits (pretty format)")
        ->check(CLI::Range(1, 17));
}

// ---------------------------------------------------------------- moments

struct MomentsOpts : CommonOpts {
    int max_order = moments::kDefaultMaxOrder;
    bool allow_unstable = false;
};

int cmd_moments(const MomentsOpts& o, std::ostream& out) {
    const auto params = make_params(o.lambda, o.alpha);
    const double rho = params.rho();
    const auto raw = moments::raw_moments(params, o.max_order, o.allow_unstable);

    Record rec;
    rec["schema"] = "moments";
    rec["lambda"] = params.lambda();
    rec["alpha"] = params.alpha();
    rec["rho"] = rho;
    rec["mean"] = moments::mean(params);
    rec["variance"] = moments::variance(params);
    rec["variation_coeff"] = moments::variation_coeff(rho);
    // Shape coefficients need rho away from 0; report them as absent rather
    // than failing the whole command.
    try {
        rec["beta1"] = moments::beta1(rho);
        rec["beta2"] = moments::beta2(rho);
    } catch (const validation_error&) {
        rec["beta1"] = nullptr;
        rec["beta2"] = nullptr;
    }
    rec["asymptotic"] = moments::asymptotic_regime(rho);
    for (size_t n = 0; n < raw.size(); ++n) {
        rec["m" + std::to_string(n + 1)] = raw[n];
    }

    RecordWriter w(out, parse_format(o.format), o.digits);
    w.write_vertical(rec);
    return 0;
}

// -------------------------------------------------------------------- cdf

struct CdfOpts : CommonOpts {
    std::vector<double> ts;
    std::string method = "series";
    double delta_a = 0.1;
    double delta_p = 0.001;
    int l = 3;
    double tol = series::kDefaultTol;
};

void put_bounds(Record& rec, const QueueParams& params, double t) {
    const auto cheb = bounds::chebyshev_lower(params, t);
    rec["chebyshev_lower"] = cheb.valid || std::isfinite(cheb.value)
                                 ? Record(cheb.value)
                                 : Record(nullptr);
    rec["chebyshev_valid"] = cheb.valid;
    const auto [lo, hi] = bounds::envelope(params, t);
    rec["envelope_lower"] = lo;
    rec["envelope_upper"] = hi;
    rec["exp_approx"] = bounds::exp_approx(params, t);
}

int cmd_cdf(const CdfOpts& o, std::ostream& out) {
    const auto params = make_params(o.lambda, o.alpha);
    const inversion::PabConfig cfg{o.delta_a, o.delta_p, o.l,
                                   inversion::PabConfig{}.max_terms};
    const bool want_series = o.method == "series" || o.method == "all";
    const bool want_pab = o.method == "pab" || o.method == "all";
    const bool want_bounds = o.method == "bounds" || o.method == "all";

    std::vector<std::string> columns{"lambda", "alpha", "t"};
    if (want_series) {
        columns.insert(columns.end(), {"series", "series_band_up", "terms"});
    }
    if (want_pab) {
        columns.insert(columns.end(),
                       {"delta_a", "delta_p", "pab", "band_down", "band_up", "n_terms"});
    }
    if (o.method == "all") columns.push_back("violation");
    if (want_bounds) {
        columns.insert(columns.end(), {"chebyshev_lower", "chebyshev_valid",
                                       "envelope_lower", "envelope_upper", "exp_approx"});
    }

    const auto series_at = [&](double u) { return series::busy_cdf(params, u, o.tol).value; };

    RecordWriter w(out, parse_format(o.format), o.digits);
    bool violated = false;
    w.begin(columns);
    for (double t : o.ts) {
        Record rec;
        rec["schema"] = "cdf";
        rec["lambda"] = params.lambda();
        rec["alpha"] = params.alpha();
        rec["t"] = t;
        if (want_series) {
            const auto r = series::busy_cdf(params, t, o.tol);
            rec["series"] = r.value;
            rec["series_band_up"] = r.truncation_error;
            rec["terms"] = r.terms_used;
        }
        if (want_pab) {
            rec["delta_a"] = o.delta_a;
            rec["delta_p"] = o.delta_p;
            const auto derived = inversion::derive(params, cfg);
            rec["n_terms"] = derived.n_terms;
            if (t < params.alpha()) {
                // Below the support the distribution is exactly 0; the tail
                // machinery is not consulted.
                rec["pab"] = 0.0;
                rec["band_down"] = 0.0;
                rec["band_up"] = 0.0;
                if (o.method == "all") rec["violation"] = false;
            } else {
                const auto est = (o.method == "all")
                                     ? inversion::cdf(params, cfg, t, series_at)
                                     : inversion::cdf(params, cfg, t);
                rec["pab"] = est.value;
                rec["band_down"] = est.error_band.first;
                rec["band_up"] = est.error_band.second;
                if (o.method == "all") {
                    // Tail contract against the series oracle, widened by the
                    // series truncation allowance so a pass is never spurious.
                    const double tau = inversion::tail(params, cfg, t);
                    const double lo =
                        1.0 - series_at(t + o.delta_a) - o.tol - o.delta_p;
                    const double hi = 1.0 - series_at(t - o.delta_a) + o.delta_p;
                    const bool bad = tau < lo - 1e-12 || tau > hi + 1e-12;
                    rec["violation"] = bad;
                    violated = violated || bad;
                }
            }
        }
        if (want_bounds) put_bounds(rec, params, t);
        w.write(rec);
    }
    w.end();
    if (violated) throw consistency_error("tail estimate violates its accuracy contract");
    return 0;
}

// ------------------------------------------------------------------ table

// E[B] = alpha + int_alpha^inf (1-B) and E[B^2] = alpha^2 + 2 int_alpha^inf
// t (1-B), by composite Simpson with panels aligned to the lattice t = k
// alpha where the density has kinks. The march stops once the survival
// function drops below 1e-12 (or once the closed form leaves its reliable
// range); the remaining mass is folded in assuming exponential decay at the
// rate lambda e^{-rho}.
std::pair<double, double> integrated_mean_variance(const QueueParams& params) {
    const double alpha = params.alpha();
    const double rate = params.lambda() * std::exp(-params.rho());
    const int max_spans =
        static_cast<int>(std::ceil(28.0 / (rate * alpha)));
    const int m = 50;
    const double h = alpha / m;
    long double s1 = 0.0L, s2 = 0.0L;
    double t_end = alpha;
    double f_end = 1.0;
    for (int k = 0; k < max_spans && f_end > 1e-12; ++k) {
        for (int j = 0; j <= m; ++j) {
            const double t = alpha * (1 + k) + h * j;
            const double wj = (j == 0 || j == m) ? 1.0 : (j % 2 ? 4.0 : 2.0);
            const double f = 1.0 - series::busy_cdf_closed(params, t);
            s1 += static_cast<long double>(wj * f);
            s2 += static_cast<long double>(wj * f * t);
            if (j == m) {
                t_end = t;
                f_end = f;
            }
        }
    }
    double i1 = static_cast<double>(s1 * h / 3.0L);
    double i2 = static_cast<double>(s2 * h / 3.0L);
    i1 += f_end / rate;
    i2 += f_end * (t_end / rate + 1.0 / (rate * rate));
    const double mean = alpha + i1;
    const double second = alpha * alpha + 2.0 * i2;
    return {mean, second - mean * mean};
}

struct Table4Block {
    double alpha;
    double delta_a;
    double delta_p;
    std::vector<double> ts;
    std::vector<double> published_ts;  // as printed; block 2 dropped the integer part
};

const std::vector<Table4Block>& table4_blocks() {
    static const std::vector<Table4Block> blocks = [] {
        std::vector<Table4Block> b;
        b.push_back({0.1, 0.001, 0.001, {0.11, 0.15, 0.2, 0.25}, {0.11, 0.15, 0.2, 0.25}});
        b.push_back({1.0, 0.1, 0.001, {2, 3, 4, 5}, {0.2, 0.3, 0.4, 0.5}});
        std::vector<double> t3{4,  5,  6,  7,  8,  9,  10, 15, 20, 25, 30,
                               35, 40, 45, 50, 55, 60, 70, 75, 80, 85};
        b.push_back({3.0, 0.5, 0.01, t3, t3});
        return b;
    }();
    return blocks;
}

struct TableOpts : CommonOpts {
    int which = 1;
};

int cmd_table(const TableOpts& o, std::ostream& out) {
    RecordWriter w(out, parse_format(o.format), o.digits);
    const std::vector<double> rhos{0.5, 1, 10, 20, 50, 100};

    if (o.which >= 1 && o.which <= 3) {
        const char* value_col = o.which == 1   ? "variation_coeff"
                                : o.which == 2 ? "beta1"
                                               : "beta2";
        const char* schema = o.which == 1 ? "table1" : o.which == 2 ? "table2" : "table3";
        w.begin({"rho", value_col});
        for (double rho : rhos) {
            Record rec;
            rec["schema"] = schema;
            rec["rho"] = rho;
            rec[value_col] = o.which == 1   ? moments::variation_coeff(rho)
                             : o.which == 2 ? moments::beta1(rho)
                                            : moments::beta2(rho);
            w.write(rec);
        }
        w.end();
        return 0;
    }

    const std::vector<std::string> row_cols{
        "lambda", "alpha",          "delta_a",        "delta_p", "t", "published_t",
        "chebyshev_lower", "envelope_lower", "pab_cdf"};
    const bool pretty = parse_format(o.format) == Format::pretty;
    if (!pretty) w.begin(row_cols);
    for (const auto& block : table4_blocks()) {
        const auto params = make_params(1.0, block.alpha);
        const inversion::PabConfig cfg{block.delta_a, block.delta_p, 3,
                                       inversion::PabConfig{}.max_terms};
        if (pretty) {
            w.note("alpha=" + render_sig(block.alpha, 3) + " lambda=1 delta_a=" +
                   render_sig(block.delta_a, 3) + " delta_p=" + render_sig(block.delta_p, 3));
            if (block.alpha == 1.0) {
                w.note("published abscissae .2/.3/.4/.5 dropped the integer part;"
                       " rows are computed at t = 2, 3, 4, 5");
            }
            w.begin(row_cols);
        }
        for (size_t i = 0; i < block.ts.size(); ++i) {
            const double t = block.ts[i];
            Record rec;
            rec["schema"] = "table4";
            rec["lambda"] = 1.0;
            rec["alpha"] = block.alpha;
            rec["delta_a"] = block.delta_a;
            rec["delta_p"] = block.delta_p;
            rec["t"] = t;
            rec["published_t"] = block.published_ts[i];
            rec["chebyshev_lower"] = bounds::chebyshev_lower(params, t).value;
            rec["envelope_lower"] = bounds::envelope(params, t).first;
            rec["pab_cdf"] = inversion::cdf(params, cfg, t).value;
            w.write(rec);
        }
        if (pretty) w.end();
    }
    if (!pretty) w.end();

    const std::vector<std::string> sum_cols{
        "lambda",    "alpha",          "mean_exact",        "mean_integrated",
        "mean_err_pct", "variance_exact", "variance_integrated", "variance_err_pct"};
    if (pretty) w.note("moment recursion vs numeric integration of the distribution function");
    w.begin(sum_cols);
    for (const auto& block : table4_blocks()) {
        const auto params = make_params(1.0, block.alpha);
        const double mean_exact = moments::mean(params);
        const double var_exact = moments::variance(params);
        const auto [mean_num, var_num] = integrated_mean_variance(params);
        Record rec;
        rec["schema"] = "table4.summary";
        rec["lambda"] = 1.0;
        rec["alpha"] = block.alpha;
        rec["mean_exact"] = mean_exact;
        rec["mean_integrated"] = mean_num;
        rec["mean_err_pct"] = 100.0 * std::fabs(mean_num - mean_exact) / mean_exact;
        rec["variance_exact"] = var_exact;
        rec["variance_integrated"] = var_num;
        rec["variance_err_pct"] = 100.0 * std::fabs(var_num - var_exact) / var_exact;
        w.write(rec);
    }
    w.end();
    return 0;
}

// --------------------------------------------------------------- simulate

struct SimulateOpts : CommonOpts {
    std::int64_t n = 0;
    std::uint64_t seed = 1;
    int workers = 0;
};

int cmd_simulate(const SimulateOpts& o, std::ostream& out) {
    const auto params = make_params(o.lambda, o.alpha);
    sim::SimConfig cfg;
    cfg.n_samples = o.n;
    cfg.seed = o.seed;
    cfg.workers = o.workers;
    const auto s = sim::run(params, cfg);

    Record rec;
    rec["schema"] = "simulate";
    rec["lambda"] = params.lambda();
    rec["alpha"] = params.alpha();
    rec["rho"] = params.rho();
    rec["n"] = s.n;
    rec["seed"] = o.seed;
    rec["mean"] = s.mean;
    rec["variance"] = s.variance;
    rec["std_error_mean"] = s.std_error_mean;
    rec["atom_fraction"] = s.atom_fraction;
    rec["atom_expected"] = std::exp(-params.rho());
    rec["min"] = s.min;
    rec["max"] = s.max;

    RecordWriter w(out, parse_format(o.format), o.digits);
    w.write_vertical(rec);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"busy-period distribution of the M|D|inf queue"};
    app.name("mdinf");
    app.require_subcommand(1);

    MomentsOpts mo;
    auto* m = app.add_subcommand("moments", "mean, variance and shape coefficients");
    add_common(m, mo);
    m->add_option("--max-order", mo.max_order, "highest raw moment order")
        ->check(CLI::Range(1, 170));
    m->add_flag("--allow-unstable", mo.allow_unstable,
                "permit orders past the digit-loss threshold");

    CdfOpts co;
    auto* c = app.add_subcommand("cdf", "distribution function by one or all methods");
    add_common(c, co);
    c->add_option("--t", co.ts, "evaluation points")->required()->delimiter(',');
    c->add_option("--method", co.method, "series, pab, bounds or all")
        ->check(CLI::IsMember({"series", "pab", "bounds", "all"}));
    c->add_option("--delta-a", co.delta_a, "tail inversion accuracy");
    c->add_option("--delta-p", co.delta_p, "tail inversion precision");
    c->add_option("--l", co.l, "tail bracket exponent");
    c->add_option("--tol", co.tol, "series truncation tolerance");

    TableOpts to;
    auto* t = app.add_subcommand("table", "regenerate a reference table (1-4)");
    add_common(t, to);
    t->add_option("which", to.which, "table number")->required()->check(CLI::Range(1, 4));

    SimulateOpts so;
    auto* s = app.add_subcommand("simulate", "Monte Carlo busy periods");
    add_common(s, so);
    s->add_option("--n", so.n, "sample count")->required();
    s->add_option("--seed", so.seed, "stream seed");
    s->add_option("--workers", so.workers, "thread count (0 = all)");

    int rc = 0;
    m->callback([&] { rc = cmd_moments(mo, out); });
    c->callback([&] { rc = cmd_cdf(co, out); });
    t->callback([&] { rc = cmd_table(to, out); });
    s->callback([&] { rc = cmd_simulate(so, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const numeric_range_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const singularity_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const resource_error& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const consistency_error& e) {
        err << "error: " << e.what() << '\n';
        return 5;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}

}  // namespace mdinf::cli
