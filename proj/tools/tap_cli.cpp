// Command-line front end: identity verification suites, rate experiments,
// K-functional reports, and multiplier-norm brackets, with CSV/JSON output.
//
// Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
// configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "tap/analysis.hpp"
#include "tap/generator.hpp"
#include "tap/modulus.hpp"
#include "tap/multiplier_norm.hpp"
#include "tap/operators.hpp"
#include "tap/rate.hpp"
#include "tap/rng.hpp"
#include "tap/serialize.hpp"
#include "tap/transform.hpp"

using nlohmann::json;
using namespace tap;

namespace {

struct RunConfig {
    std::string cmd;
    int d = 2;
    int K = 16;
    int r = 4;
    int n = 1;
    std::string p = "2";
    double alpha = 0.5;
    bool alpha_set = false;
    std::string modulus;
    std::uint64_t seed = 42;
    int j0 = 2;
    int j1 = 12;
    std::string out;
    std::string format = "csv";
    bool self_test_fault = false;
    int oversample = 4;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LpExponent config_lp(const RunConfig& cfg) {
    try {
        return parse_lp(cfg.p);
    } catch (const std::exception&) {
        throw ConfigError("invalid --p: must be a real >= 1 or 'inf' (got '" +
                          cfg.p + "')");
    }
}

void validate_common(const RunConfig& cfg) {
    if (cfg.d < 1)
        throw ConfigError("invalid --d: dimension must be >= 1 (got " +
                          std::to_string(cfg.d) + ")");
    if (cfg.K < 1)
        throw ConfigError("invalid --K: degree must be >= 1 (got " +
                          std::to_string(cfg.K) + ")");
    if (cfg.r < 1)
        throw ConfigError("invalid --r: order must be >= 1 (got " +
                          std::to_string(cfg.r) + ")");
    if (cfg.n < 1)
        throw ConfigError("invalid --n: order must be >= 1 (got " +
                          std::to_string(cfg.n) + ")");
    if (!(cfg.j1 > cfg.j0 && cfg.j0 >= 1))
        throw ConfigError("invalid --j0/--j1: need j1 > j0 >= 1 (got " +
                          std::to_string(cfg.j0) + ", " + std::to_string(cfg.j1) + ")");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("invalid --format: must be csv or json (got '" +
                          cfg.format + "')");
    config_lp(cfg);
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
    f << text;
    std::cout << "report written to " << cfg.out << "\n";
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct SuiteResult {
    std::string name;
    bool pass;
    double metric;  // worst observed deviation
    double tol;
    std::string note;
};

SpectralFunction random_function(int d, int K, Rng& rng) {
    SpectralFunction f(d, K);
    for (auto& v : f.coeffs()) v = rng.complex_in_disc();
    return f;
}

SuiteResult suite_dft(const RunConfig& cfg, Rng& rng) {
    double worst = 0.0;
    const SpectralFunction f = random_function(cfg.d, cfg.K, rng);
    const int m = 2 * (2 * cfg.K + 1);
    worst = std::max(worst, max_abs_coeff_diff(analyze(synthesize(f, m), cfg.K), f));
    worst = std::max(worst, std::abs(lp_norm(synthesize(f, m), LpExponent::two()) -
                                     f.l2_norm()));
    return {"dft-roundtrip", worst < 1e-12, worst, 1e-12, "analyze/synthesize/parseval"};
}

SuiteResult suite_lambda(const RunConfig&, Rng&) {
    double worst = 0.0;
    bool pass = true;
    for (int r = 1; r <= 8 && pass; ++r) {
        for (long nu = 0; nu <= 200 && pass; ++nu) {
            double prev = -1.0;
            for (int i = 0; i <= 100; ++i) {
                const double rho = static_cast<double>(i) / 100.0;
                const double lam = lambda_coeff(nu, r, rho);
                if (lam < 0.0 || lam > 1.0) pass = false;
                if (lam < prev - 1e-12) pass = false;
                prev = lam;
                if (lambda_coeff(nu, r + 1, rho) < lam - 1e-14) pass = false;
                if (nu >= r && rho > 0.0 && rho < 1.0) {
                    const double q = std::max(rho, 1.0 - rho);
                    const double bound =
                        r * std::pow(q, static_cast<double>(nu)) *
                        std::pow(static_cast<double>(nu), r - 1);
                    if (lam > bound * (1.0 + 1e-12)) pass = false;
                }
            }
            if (lambda_coeff(nu, r, 0.0) != (nu < r ? 1.0 : 0.0)) pass = false;
            if (lambda_coeff(nu, r, 1.0) != 1.0) pass = false;
        }
    }
    worst = std::max(std::abs(lambda_coeff(2, 2, 0.5) - 0.75),
                     std::abs(lambda_coeff(3, 2, 0.5) - 0.5));
    pass = pass && worst < 1e-15;
    return {"lambda", pass, worst, 1e-15, "bounds/monotonicity/growth/spot values"};
}

SuiteResult suite_taylor_form(const RunConfig& cfg, Rng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 6; ++trial) {
        const SpectralFunction f = random_function(cfg.d, cfg.K, rng);
        for (int r = 1; r <= cfg.r; ++r) {
            for (double rho : {0.1, 0.5, 0.9, 0.99}) {
                SpectralFunction direct = tap_mean(f, TapParameters(rho, r));
                if (cfg.self_test_fault) {
                    // deliberately corrupt one lambda weight by 1e-6
                    BlockMultiplier bad = tap_multiplier(f.box().nu_max(),
                                                         TapParameters(rho, r));
                    if (bad.nu_max() >= r)
                        bad.values[static_cast<std::size_t>(r)] += 1e-6;
                    direct = apply(bad, f);
                }
                worst = std::max(worst, max_abs_coeff_diff(
                                            direct, taylor_form(f, TapParameters(rho, r))));
            }
        }
    }
    return {"taylor-form", worst < 1e-12, worst, 1e-12,
            cfg.self_test_fault ? "fault injected" : "tap_mean vs taylor_form"};
}

SuiteResult suite_derivatives(const RunConfig& cfg, Rng& rng) {
    double worst = 0.0;
    const SpectralFunction f = random_function(cfg.d, cfg.K, rng);
    for (int r = 1; r <= cfg.r; ++r) {
        for (double rho : {0.1, 0.5, 0.9, 0.99}) {
            SpectralFunction lhs = poisson_rho_derivative(f, rho, r);
            lhs *= std::pow(rho, r);
            worst = std::max(worst, max_rel_coeff_diff(
                                        lhs, radial_derivative(poisson_mean(f, rho), r)));
            const TapParameters p1(rho, r), p2(0.5 * rho + 0.25, r);
            worst = std::max(worst,
                             max_rel_coeff_diff(tap_mean(tap_mean(f, p1), p2),
                                                tap_mean(tap_mean(f, p2), p1)));
        }
        worst = std::max(worst,
                         max_rel_coeff_diff(radial_derivative(radial_derivative(f, r), r + 1),
                                            radial_derivative(radial_derivative(f, r + 1), r)));
    }
    return {"derivative-identities", worst < 1e-14, worst, 1e-14,
            "scaled rho-derivative vs radial; commutation"};
}

SuiteResult suite_remainder(const RunConfig& cfg, Rng& rng) {
    double worst = 0.0;
    const int m = 2 * cfg.K + 1;
    const SpectralFunction f = random_function(cfg.d, cfg.K, rng);
    for (int r = 1; r <= std::min(cfg.r, 4); ++r)
        for (double rho : {0.1, 0.5, 0.9}) {
            const SampleField lhs = remainder_integral(f, rho, r, m);
            const SampleField rhs =
                synthesize(f - tap_mean(f, TapParameters(rho, r)), m);
            worst = std::max(worst, linf_distance(lhs, rhs));
        }
    return {"remainder", worst < 1e-10, worst, 1e-10,
            "quadrature route vs f - A_r(f)"};
}

SuiteResult suite_kernel(const RunConfig& cfg, Rng& rng) {
    double worst = 0.0;
    const double rho = 0.5;
    // d = 1 closed form
    const SampleField k1 = y_poisson_kernel(rho, 1, 64);
    for (int t = 0; t < 64; ++t) {
        const double x = 2.0 * std::numbers::pi * t / 64.0;
        const double classical =
            (1.0 - rho * rho) / (1.0 - 2.0 * rho * std::cos(x) + rho * rho);
        worst = std::max(worst,
                         std::abs(k1.values[static_cast<std::size_t>(t)] - classical));
    }
    // convolution identity on a Y-supported function
    const int d = std::min(cfg.d, 2);  // naive convolution cost grows as m^{2d}
    const int K = std::min(cfg.K, 5);
    const int m = 3 * (2 * K + 1);
    const SpectralFunction f = project_y(random_function(d, K, rng));
    const SampleField ker = y_poisson_kernel(0.4, d, m);
    const SampleField fs = synthesize(f, m);
    const SampleField expect = synthesize(poisson_mean(f, 0.4), m);
    const std::size_t total = fs.values.size();
    SampleField conv(d, m);
    std::vector<int> x(static_cast<std::size_t>(d)), s(static_cast<std::size_t>(d));
    for (std::size_t xf = 0; xf < total; ++xf) {
        std::size_t tmp = xf;
        for (int j = d - 1; j >= 0; --j) {
            x[static_cast<std::size_t>(j)] = static_cast<int>(tmp % m);
            tmp /= m;
        }
        Complex acc(0.0, 0.0);
        for (std::size_t sf = 0; sf < total; ++sf) {
            std::size_t t2 = sf;
            for (int j = d - 1; j >= 0; --j) {
                s[static_cast<std::size_t>(j)] = static_cast<int>(t2 % m);
                t2 /= m;
            }
            std::size_t uf = 0;
            for (int j = 0; j < d; ++j)
                uf = uf * static_cast<std::size_t>(m) +
                     static_cast<std::size_t>((x[static_cast<std::size_t>(j)] +
                                               s[static_cast<std::size_t>(j)]) % m);
            acc += fs.values[uf] * ker.values[sf];
        }
        conv.values[xf] = acc / static_cast<double>(total);
    }
    worst = std::max(worst, linf_distance(conv, expect));
    return {"kernel", worst < 1e-10, worst, 1e-10,
            "closed form + convolution identity"};
}

SuiteResult suite_projection(const RunConfig& cfg, Rng& rng) {
    const SpectralFunction f = random_function(cfg.d, cfg.K, rng);
    const SpectralFunction g = random_function(cfg.d, cfg.K, rng);
    double worst = 0.0;
    const SpectralFunction pf = project_y(f);
    worst = std::max(worst, max_abs_coeff_diff(project_y(pf), pf));
    worst = std::max(worst,
                     max_abs_coeff_diff(project_y(f + g), project_y(f) + project_y(g)));
    const TapParameters prm(0.6, std::min(cfg.r, 3));
    worst = std::max(worst, max_abs_coeff_diff(project_y(tap_mean(f, prm)),
                                               tap_mean(pf, prm)));
    return {"projection", worst == 0.0, worst, 0.0, "idempotent/linear/commuting"};
}

SuiteResult suite_serialization(const RunConfig& cfg, Rng& rng) {
    const SpectralFunction f = random_function(std::min(cfg.d, 2), std::min(cfg.K, 6), rng);
    const double worst =
        max_abs_coeff_diff(spectral_function_from_json(to_json(f)), f);
    return {"serialization", worst == 0.0, worst, 0.0, "json round-trip"};
}

int cmd_verify(const RunConfig& cfg) {
    validate_common(cfg);
    Rng rng(cfg.seed);
    std::vector<SuiteResult> results;
    results.push_back(suite_dft(cfg, rng));
    results.push_back(suite_lambda(cfg, rng));
    results.push_back(suite_taylor_form(cfg, rng));
    results.push_back(suite_derivatives(cfg, rng));
    results.push_back(suite_remainder(cfg, rng));
    results.push_back(suite_kernel(cfg, rng));
    results.push_back(suite_projection(cfg, rng));
    results.push_back(suite_serialization(cfg, rng));

    bool all = true;
    std::ostringstream text;
    json jr = json::array();
    for (const SuiteResult& r : results) {
        all = all && r.pass;
        std::printf("%-6s %-22s max_dev=%-12.3e tol=%-8.0e %s\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.metric, r.tol,
                    r.note.c_str());
        text << r.name << "," << (r.pass ? "pass" : "fail") << ","
             << fmt(r.metric) << "," << fmt(r.tol) << "\n";
        jr.push_back({{"suite", r.name},
                      {"pass", r.pass},
                      {"max_deviation", r.metric},
                      {"tolerance", r.tol},
                      {"note", r.note}});
    }
    if (!cfg.out.empty()) {
        if (cfg.format == "csv")
            write_output(cfg, "suite,status,max_deviation,tolerance\n" + text.str());
        else
            write_output(cfg, json({{"command", "verify"}, {"suites", jr}}).dump(2) + "\n");
    }
    return all ? 0 : 1;
}

// ---------------------------------------------------------------------------
// rates
// ---------------------------------------------------------------------------

std::string rate_csv(const RateReport& rep) {
    std::ostringstream out;
    out << "j,rho,error,fitted,residual,truncation_limited,noise_floor\n";
    for (const RatePoint& pt : rep.points)
        out << pt.j << "," << fmt(pt.rho) << "," << fmt(pt.error) << ","
            << fmt(pt.fitted) << "," << fmt(pt.residual) << ","
            << (pt.truncation_limited ? 1 : 0) << "," << (pt.noise_floor ? 1 : 0)
            << "\n";
    return out.str();
}

json rate_json(const RateReport& rep, const std::string& verdict) {
    json points = json::array();
    json flags = json::array();
    for (const RatePoint& pt : rep.points) {
        points.push_back({{"j", pt.j},
                          {"rho", pt.rho},
                          {"error", pt.error},
                          {"fitted", pt.fitted},
                          {"residual", pt.residual}});
        if (pt.truncation_limited) flags.push_back(pt.j);
    }
    return json{{"slope", rep.slope},
                {"intercept", rep.intercept},
                {"residual", rep.residual},
                {"fitted_points", rep.fitted_points},
                {"exact_reproduction", rep.exact_reproduction},
                {"verdict", verdict},
                {"truncation_flags", flags},
                {"points", points}};
}

int cmd_rates(const RunConfig& cfg) {
    validate_common(cfg);
    const LpExponent p = config_lp(cfg);

    if (cfg.alpha_set) {
        // decay-family experiment with target slope r-n+alpha
        if (cfg.n > cfg.r)
            throw ConfigError("invalid --n: need n <= r for the rate experiment");
        if (!(cfg.alpha > 0.0 && cfg.alpha < static_cast<double>(cfg.n)))
            throw ConfigError("invalid --alpha: need 0 < alpha < n");
        DecaySpec base;
        base.d = cfg.d;
        base.K = cfg.K;
        base.seed = cfg.seed;
        base.per_block = 1;
        const DirectReport rep = direct_theorem_experiment(
            base, cfg.r, cfg.n, cfg.alpha, p, cfg.j0, cfg.j1);
        std::printf("rate experiment: slope=%.4f target=%.4f (dev %+0.4f), "
                    "hypothesis slope=%.4f (alpha=%.3f), oracle dev=%.2e\n",
                    rep.rate.slope, rep.target_slope,
                    rep.rate.slope - rep.target_slope, rep.hypothesis_slope,
                    cfg.alpha, rep.oracle_max_rel_dev);
        const std::string verdict = rep.slope_ok ? "pass" : "fail";
        if (cfg.format == "csv")
            write_output(cfg, rate_csv(rep.rate));
        else {
            json j = rate_json(rep.rate, verdict);
            j["target_slope"] = rep.target_slope;
            j["hypothesis_slope"] = rep.hypothesis_slope;
            j["oracle_max_rel_dev"] = rep.oracle_max_rel_dev;
            j["oracle_slope"] = rep.oracle_slope;
            write_output(cfg, j.dump(2) + "\n");
        }
        return rep.slope_ok ? 0 : 1;
    }

    // plain saturation sweep on the single mode of degree K
    std::vector<int> k(static_cast<std::size_t>(cfg.d), 0);
    k[0] = cfg.K;
    const SpectralFunction mode = unit_mode(cfg.d, cfg.K, k);
    const RateReport rep = rate_sweep(mode, cfg.r, p, cfg.j0, cfg.j1);
    const bool ok = rep.exact_reproduction ||
                    (rep.fit_valid &&
                     std::abs(rep.slope - static_cast<double>(cfg.r)) <= 0.1);
    std::printf("saturation sweep on e_k, |k|_1=%d: slope=%.4f target=%d %s\n",
                cfg.K, rep.slope, cfg.r,
                rep.exact_reproduction ? "(exact reproduction)" : "");
    if (cfg.format == "csv")
        write_output(cfg, rate_csv(rep));
    else
        write_output(cfg, rate_json(rep, ok ? "pass" : "fail").dump(2) + "\n");
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// kfun
// ---------------------------------------------------------------------------

int cmd_kfun(const RunConfig& cfg) {
    validate_common(cfg);
    const LpExponent p = config_lp(cfg);

    DecaySpec spec;
    spec.d = cfg.d;
    spec.K = cfg.K;
    spec.s = cfg.alpha_set ? cfg.alpha + 0.5 : 1.0;
    spec.seed = cfg.seed;
    const SpectralFunction f = generate_test_function(spec);

    std::ostringstream csv;
    csv << "j,delta,kfun_upper,sandwich_lower,sandwich_upper,ratio_lower,ratio_upper\n";
    json points = json::array();
    double band_lo = 1e300, band_hi = 0.0;
    bool ok = true;
    for (int j = cfg.j0; j <= cfg.j1; ++j) {
        const double delta = std::ldexp(1.0, -j);
        const SandwichReport s = realization_sandwich(f, 1.0 - delta, cfg.n, p);
        csv << j << "," << fmt(delta) << "," << fmt(s.k_value) << ","
            << fmt(s.lower_term) << "," << fmt(s.upper_term) << ","
            << fmt(s.ratio_lower()) << "," << fmt(s.ratio_upper()) << "\n";
        points.push_back({{"j", j},
                          {"delta", delta},
                          {"kfun_upper", s.k_value},
                          {"sandwich_lower", s.lower_term},
                          {"sandwich_upper", s.upper_term}});
        if (!s.trivial) {
            band_lo = std::min(band_lo, s.ratio_upper());
            band_hi = std::max(band_hi, s.ratio_lower());
            ok = ok && s.lower_term <= 10.0 * s.k_value &&
                 s.k_value <= 10.0 * s.upper_term;
        }
    }
    std::printf("k-functional sweep: worst L/K=%.3f worst K/U=%.3f %s\n",
                band_hi, band_lo, ok ? "(bounded)" : "(band exceeded)");
    if (cfg.format == "csv")
        write_output(cfg, csv.str());
    else
        write_output(cfg, json({{"command", "kfun"},
                                {"n", cfg.n},
                                {"p", cfg.p},
                                {"bounded", ok},
                                {"points", points}}).dump(2) + "\n");
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// multnorm
// ---------------------------------------------------------------------------

int cmd_multnorm(const RunConfig& cfg) {
    validate_common(cfg);
    const LpExponent p = config_lp(cfg);
    const double rho = 0.5;

    // matched ell-1 cutoff across d = 1, 2, 3
    const int nu_cap = ((cfg.K + 5) / 6) * 6;
    const BlockMultiplier pois = poisson_multiplier(nu_cap, rho);
    const BlockMultiplier lam =
        tap_multiplier(nu_cap, TapParameters(rho, std::max(1, cfg.r)));

    bool ok = true;
    std::ostringstream csv;
    csv << "family,d,p,nu_max,lower,upper,exact,kernel_grid\n";
    json entries = json::array();
    for (const auto* fam : {&pois, &lam}) {
        const std::string name = fam == &pois ? "poisson" : "tap";
        std::vector<MultiplierNormEstimate> ests;
        for (int d = 1; d <= 3; ++d) {
            if (!(p == LpExponent::two()) && d == 3) continue;  // kernel grids get large
            const MultiplierNormEstimate e =
                multiplier_norm(*fam, d, p, nu_cap / d, cfg.oversample, 8, cfg.seed);
            ests.push_back(e);
            csv << name << "," << d << "," << cfg.p << "," << e.nu_max << ","
                << fmt(e.lower) << "," << fmt(e.upper) << "," << (e.exact ? 1 : 0)
                << "," << e.kernel_grid << "\n";
            entries.push_back({{"family", name},
                               {"d", d},
                               {"nu_max", e.nu_max},
                               {"lower", e.lower},
                               {"upper", e.upper},
                               {"exact", e.exact},
                               {"kernel_grid", e.kernel_grid},
                               {"corpus_grid", e.corpus_grid}});
        }
        if (p == LpExponent::two()) {
            for (std::size_t i = 1; i < ests.size(); ++i)
                ok = ok && ests[i].upper == ests[0].upper;  // exact equality
        } else {
            for (const auto& e : ests) ok = ok && e.lower <= e.upper + 1e-9;
            if (ests.size() >= 2)
                ok = ok && std::max(ests[0].lower, ests[1].lower) <=
                               std::min(ests[0].upper, ests[1].upper) + 1e-9;
        }
    }
    std::printf("multiplier norms at p=%s across d: %s\n", cfg.p.c_str(),
                ok ? "consistent" : "INCONSISTENT");
    if (cfg.format == "csv")
        write_output(cfg, csv.str());
    else
        write_output(cfg, json({{"command", "multnorm"},
                                {"p", cfg.p},
                                {"consistent", ok},
                                {"estimates", entries}}).dump(2) + "\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Spectral summation means on the torus: identity verification, "
        "approximation-rate experiments, K-functional reports, and "
        "multiplier-norm brackets"};

    RunConfig cfg;
    app.add_option("--cmd", cfg.cmd, "verify | rates | kfun | multnorm")->required();
    app.add_option("--d", cfg.d, "dimension of the torus (default 2)");
    app.add_option("--K", cfg.K, "per-axis degree of the coefficient box (default 16)");
    app.add_option("--r", cfg.r, "operator order r (default 4)");
    app.add_option("--n", cfg.n, "derivative / K-functional order n (default 1)");
    app.add_option("--p", cfg.p, "norm exponent: 1, 2 or inf (default 2)");
    auto* alpha_opt =
        app.add_option("--alpha", cfg.alpha,
                       "smoothness exponent of the modulus t^alpha; enables the "
                       "decay-family rate experiment");
    app.add_option("--modulus", cfg.modulus,
                   "modulus spec: power:a | power-log:a,b | custom:t=w,...");
    app.add_option("--seed", cfg.seed, "RNG seed (default 42)");
    app.add_option("--j0", cfg.j0, "first sweep index, rho = 1-2^-j (default 2)");
    app.add_option("--j1", cfg.j1, "last sweep index (default 12)");
    app.add_option("--out", cfg.out, "output file (stdout when omitted)");
    app.add_option("--format", cfg.format, "csv | json (default csv)");
    app.add_flag("--self-test-fault", cfg.self_test_fault,
                 "perturb one lambda weight by 1e-6; the taylor-form suite must fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    cfg.alpha_set = alpha_opt->count() > 0;

    try {
        if (cfg.cmd == "verify") return cmd_verify(cfg);
        if (cfg.cmd == "rates") return cmd_rates(cfg);
        if (cfg.cmd == "kfun") return cmd_kfun(cfg);
        if (cfg.cmd == "multnorm") return cmd_multnorm(cfg);
        std::cerr << "invalid --cmd: must be verify, rates, kfun or multnorm (got '"
                  << cfg.cmd << "')\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration rejected: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
