// Acceptance suite: one criterion per check, one PASS/FAIL line each.
// Exit status 0 only when every criterion passes.
//
// Coefficient comparisons use max |a-b| / max(1, |a|, |b|): plain absolute
// error for O(1) values, relative once magnitudes grow (radial derivatives
// reach ~1e8 on this corpus, where an absolute 1e-14 would be below double
// resolution).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tap/analysis.hpp"
#include "tap/generator.hpp"
#include "tap/modulus.hpp"
#include "tap/multiplier_norm.hpp"
#include "tap/operators.hpp"
#include "tap/rate.hpp"
#include "tap/rng.hpp"
#include "tap/transform.hpp"

using namespace tap;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("%s  criterion %02d  %-34s %s  [%.1fs]\n", pass ? "PASS" : "FAIL",
                id, name.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// the shared random corpus: 100 functions spread over d = 1, 2, 3 at K = 16
std::vector<SpectralFunction> corpus() {
    std::vector<SpectralFunction> fs;
    Rng rng(20240);
    for (int i = 0; i < 100; ++i) {
        const int d = 1 + i % 3;
        SpectralFunction f(d, 16);
        for (auto& v : f.coeffs()) v = rng.complex_in_disc();
        fs.push_back(std::move(f));
    }
    return fs;
}

void criterion_taylor_form(const std::vector<SpectralFunction>& fs) {
    Timer t;
    double worst = 0.0;
    for (const SpectralFunction& f : fs)
        for (int r = 1; r <= 5; ++r)
            for (double rho : {0.1, 0.5, 0.9, 0.99}) {
                const TapParameters prm(rho, r);
                worst = std::max(worst,
                                 max_abs_coeff_diff(tap_mean(f, prm), taylor_form(f, prm)));
            }
    report(1, "taylor-form identity", worst < 1e-12,
           "max_err=" + num(worst) + " (tol 1e-12)", t.elapsed());
}

void criterion_remainder(const std::vector<SpectralFunction>& fs) {
    Timer t;
    double worst = 0.0;
    for (const SpectralFunction& f : fs) {
        const int m = 2 * f.degree() + 1;
        for (int r = 1; r <= 4; ++r)
            for (double rho : {0.1, 0.5, 0.9, 0.99}) {
                const SampleField lhs = remainder_integral(f, rho, r, m);
                const SampleField rhs =
                    synthesize(f - tap_mean(f, TapParameters(rho, r)), m);
                worst = std::max(worst, linf_distance(lhs, rhs));
            }
    }
    report(2, "remainder-integral identity", worst < 1e-10,
           "max_err=" + num(worst) + " (tol 1e-10)", t.elapsed());
}

void criterion_derivative_identities(const std::vector<SpectralFunction>& fs) {
    Timer t;
    double worst = 0.0;
    for (const SpectralFunction& f : fs)
        for (int r = 1; r <= 5; ++r)
            for (double rho : {0.1, 0.5, 0.9, 0.99}) {
                SpectralFunction lhs = poisson_rho_derivative(f, rho, r);
                lhs *= std::pow(rho, r);
                worst = std::max(
                    worst, max_rel_coeff_diff(lhs, radial_derivative(poisson_mean(f, rho), r)));
                const TapParameters p1(rho, r), p2(0.25 + 0.5 * rho, r);
                worst = std::max(worst,
                                 max_rel_coeff_diff(tap_mean(tap_mean(f, p1), p2),
                                                    tap_mean(tap_mean(f, p2), p1)));
                worst = std::max(
                    worst,
                    max_rel_coeff_diff(radial_derivative(radial_derivative(f, r), r + 1),
                                       radial_derivative(radial_derivative(f, r + 1), r)));
            }
    report(3, "derivative identities", worst < 1e-14,
           "max_err=" + num(worst) + " (tol 1e-14, scaled)", t.elapsed());
}

void criterion_lambda() {
    Timer t;
    bool pass = true;
    double worst_bound = 0.0;
    for (int r = 1; r <= 8 && pass; ++r)
        for (long nu = 0; nu <= 200 && pass; ++nu) {
            double prev = -1.0;
            for (int i = 0; i <= 100; ++i) {
                const double rho = static_cast<double>(i) / 100.0;
                const double lam = lambda_coeff(nu, r, rho);
                if (!(lam >= 0.0 && lam <= 1.0)) pass = false;
                if (lam < prev - 1e-12) pass = false;
                prev = lam;
                if (lambda_coeff(nu, r + 1, rho) < lam - 1e-14) pass = false;
                if (nu >= r && rho > 0.0 && rho < 1.0) {
                    const double q = std::max(rho, 1.0 - rho);
                    const double bound = r * std::pow(q, static_cast<double>(nu)) *
                                         std::pow(static_cast<double>(nu), r - 1);
                    if (lam > bound * (1.0 + 1e-12)) pass = false;
                }
            }
            if (lambda_coeff(nu, r, 0.0) != (nu < r ? 1.0 : 0.0)) pass = false;
            if (lambda_coeff(nu, r, 1.0) != 1.0) pass = false;
        }
    const double spot = std::max(std::abs(lambda_coeff(2, 2, 0.5) - 0.75),
                                 std::abs(lambda_coeff(3, 2, 0.5) - 0.5));
    worst_bound = spot;
    pass = pass && spot < 1e-15;
    report(4, "lambda properties", pass,
           "spot_err=" + num(worst_bound) + " (tol 1e-15)", t.elapsed());
}

void criterion_saturation() {
    Timer t;
    bool pass = true;
    double worst = 0.0;
    for (int r = 1; r <= 3; ++r)
        for (int dn : {0, 1, 3}) {
            const int nu = r + dn;
            const SpectralFunction mode = unit_mode(1, nu, std::vector<int>{nu});
            const RateReport rep = rate_sweep(mode, r, LpExponent::two(), 2, 12);
            if (!rep.fit_valid) {
                pass = false;
                continue;
            }
            const double dev = std::abs(rep.slope - static_cast<double>(r));
            worst = std::max(worst, dev);
            pass = pass && dev <= 0.1;
        }
    report(5, "saturation slope", pass, "max_dev=" + num(worst) + " (tol 0.1)",
           t.elapsed());
}

void criterion_direct_rates() {
    Timer t;
    bool pass = true;
    std::string detail;
    const std::vector<std::array<int, 2>> rns{{2, 1}, {3, 1}, {3, 2}};
    for (const auto& rn : rns) {
        const int r = rn[0], n = rn[1];
        const double alpha = 0.5;
        for (int d : {1, 2}) {
            DecaySpec base;
            base.d = d;
            base.K = d == 1 ? 16384 : 2048;
            base.seed = 123;
            base.per_block = 1;
            const DirectReport rep = direct_theorem_experiment(
                base, r, n, alpha, LpExponent::two(), 4, 12);
            const double dev = rep.rate.slope - rep.target_slope;
            const bool ok = rep.slope_ok && rep.oracle_max_rel_dev < 1e-10 &&
                            rep.rate.fit_valid;
            pass = pass && ok;
            char buf[96];
            std::snprintf(buf, sizeof(buf), " (%d,%d,d%d):%+.3f", r, n, d, dev);
            detail += buf;
        }
    }
    report(6, "direct-theorem rate", pass, "slope devs" + detail + " (tol 0.15)",
           t.elapsed());
}

void criterion_inverse_certificates() {
    Timer t;
    bool pass = true;
    double worst_band = 0.0;
    const std::vector<std::array<int, 2>> rns{{2, 1}, {3, 1}, {3, 2}};
    for (const auto& rn : rns) {
        const int r = rn[0], n = rn[1];
        for (int d : {1, 2}) {
            DecaySpec base;
            base.d = d;
            base.K = d == 1 ? 16384 : 2048;
            base.seed = 123;
            base.per_block = 1;
            const InverseReport rep = inverse_theorem_experiment(
                base, r, n, 0.5, LpExponent::two(), 4, 12);
            if (rep.refused || rep.mp_ratios.size() < 3) {
                pass = false;
                continue;
            }
            worst_band = std::max(worst_band, std::max(rep.mp_band, rep.k_band));
            pass = pass && rep.mp_band < 10.0 && rep.k_band < 10.0;
        }
    }

    // single-mode closed forms
    double worst_closed = 0.0;
    for (int r : {2, 3})
        for (int n : {1, r - 1}) {
            if (n < 1) continue;
            const int nu = r + 2;
            const SpectralFunction mode = unit_mode(1, nu, std::vector<int>{nu});
            const SpectralFunction g = radial_derivative(mode, r - n);
            for (int j = 2; j <= 8; ++j) {
                const double rho = 1.0 - std::ldexp(1.0, -j);
                const double delta = 1.0 - rho;
                const double mp = m_p(mode, rho, r, LpExponent::two()).value;
                const double mp_closed = falling_factorial(nu, r) *
                                         std::pow(rho, static_cast<double>(nu - r)) *
                                         std::pow(rho, r);
                worst_closed = std::max(worst_closed, std::abs(mp - mp_closed));
                const double kv =
                    k_functional(g, delta, n, LpExponent::two()).upper;
                const double amp = falling_factorial(nu, r - n);
                const double kv_closed =
                    amp * std::min(1.0, std::pow(delta, n) * falling_factorial(nu, n));
                worst_closed = std::max(worst_closed, std::abs(kv - kv_closed) /
                                                          std::max(1.0, amp));
            }
        }
    pass = pass && worst_closed < 1e-8;
    report(7, "inverse-theorem certificates", pass,
           "max_band=" + num(worst_band) + " (tol 10), closed_err=" +
               num(worst_closed) + " (tol 1e-8)",
           t.elapsed());
}

void criterion_kfun_oracle() {
    Timer t;
    double worst = 0.0;
    bool never_below = true;
    for (int n = 1; n <= 3; ++n)
        for (int nu = 1; nu <= 20; ++nu) {
            const SpectralFunction mode = unit_mode(1, nu, std::vector<int>{nu});
            const double mu = falling_factorial(nu, n);
            for (int e = 1; e <= 10; ++e) {
                const double delta = std::ldexp(1.0, -e);
                const double closed =
                    nu < n ? 0.0 : std::min(1.0, std::pow(delta, n) * mu);
                const double upper =
                    k_functional(mode, delta, n, LpExponent::two()).upper;
                worst = std::max(worst, std::abs(upper - closed));
                never_below = never_below && upper >= closed - 1e-10;
            }
        }
    report(8, "k-functional closed form", worst < 1e-8 && never_below,
           "max_err=" + num(worst) + " (tol 1e-8)", t.elapsed());
}

void criterion_multiplier_norm() {
    Timer t;
    bool pass = true;
    const double rho = 0.5;
    const int nu_cap = 24;
    const BlockMultiplier pois = poisson_multiplier(nu_cap, rho);
    const BlockMultiplier lam = tap_multiplier(nu_cap, TapParameters(rho, 2));

    for (const BlockMultiplier* fam : {&pois, &lam}) {
        // p = 2: identical sup over the matched prefix, zero tolerance
        const double n1 = multiplier_norm(*fam, 1, LpExponent::two(), 24).upper;
        const double n2 = multiplier_norm(*fam, 2, LpExponent::two(), 12).upper;
        const double n3 = multiplier_norm(*fam, 3, LpExponent::two(), 8).upper;
        pass = pass && n1 == n2 && n2 == n3;

        for (LpExponent p : {LpExponent::one(), LpExponent::infinity()}) {
            const MultiplierNormEstimate e1 = multiplier_norm(*fam, 1, p, 24, 4, 8);
            const MultiplierNormEstimate e2 = multiplier_norm(*fam, 2, p, 12, 4, 8);
            pass = pass && e1.lower <= e1.upper + 1e-9;
            pass = pass && e2.lower <= e2.upper + 1e-9;
            pass = pass && std::max(e1.lower, e2.lower) <=
                               std::min(e1.upper, e2.upper) + 1e-9;
        }
    }
    report(9, "multiplier-norm dimension match", pass,
           "p=2 exact, p in {1,inf} brackets overlap", t.elapsed());
}

void criterion_zbs() {
    Timer t;
    std::vector<double> deltas;
    for (int e = 1; e <= 7; ++e) deltas.push_back(std::pow(10.0, -e));

    bool pass = true;
    double worst = 0.0;

    // t^alpha: ratio limits 1/alpha and 1/(n-alpha) at delta = 1e-6
    for (const auto& [alpha, n] : std::vector<std::pair<double, int>>{{0.5, 2}, {0.25, 1}}) {
        const ZbsReport rep = zbs_check(power_modulus(alpha), n, deltas);
        pass = pass && rep.conditions.all() && rep.z_bounded && rep.zn_bounded;
        const double z_lim = 1.0 / alpha;
        const double zn_lim = 1.0 / (static_cast<double>(n) - alpha);
        const double ez = std::abs(rep.z_ratio[5] - z_lim) / z_lim;
        const double ezn = std::abs(rep.zn_ratio[5] - zn_lim) / zn_lim;
        worst = std::max(worst, std::max(ez, ezn));
        pass = pass && ez < 0.01 && ezn < 0.01;
    }

    // t^n fails (Z_n)
    const ZbsReport sat = zbs_check(power_modulus(2.0), 2, deltas);
    pass = pass && sat.conditions.all() && sat.z_bounded && !sat.zn_bounded;

    // 1/ln(e/t) fails (Z)
    const Modulus invlog(
        [](double v) { return v <= 0.0 ? 0.0 : 1.0 / (1.0 - std::log(v)); },
        "inv-log");
    const ZbsReport slow = zbs_check(invlog, 1, deltas);
    pass = pass && slow.conditions.all() && !slow.z_bounded;

    report(10, "zbs checker", pass,
           "ratio_err=" + num(worst) + " (tol 1%), failure cases flagged",
           t.elapsed());
}

}  // namespace

int main() {
    Timer total;
    std::printf("acceptance suite\n");

    const std::vector<SpectralFunction> fs = corpus();
    criterion_taylor_form(fs);
    criterion_remainder(fs);
    criterion_derivative_identities(fs);
    criterion_lambda();
    criterion_saturation();
    criterion_direct_rates();
    criterion_inverse_certificates();
    criterion_kfun_oracle();
    criterion_multiplier_norm();
    criterion_zbs();

    std::printf("%d/10 criteria passed  [total %.1fs]\n", 10 - g_failures,
                total.elapsed());
    return g_failures == 0 ? 0 : 1;
}
