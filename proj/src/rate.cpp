#include "tap/rate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tap {

SlopeFit slope_fit(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("slope_fit: mismatched lengths");
    if (xs.size() < 3)
        throw std::invalid_argument("slope_fit: need at least 3 points");
    const std::size_t n = xs.size();
    double sx = 0.0, sy = 0.0;
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(xs[i] > 0.0 && ys[i] > 0.0))
            throw std::invalid_argument("slope_fit: points must be positive");
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / static_cast<double>(n), my = sy / static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("slope_fit: degenerate abscissae");
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.residual = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        fit.residual = std::max(
            fit.residual, std::abs(ly[i] - (fit.intercept + fit.slope * lx[i])));
    return fit;
}

RateReport rate_sweep(const SpectralFunction& f, int r, LpExponent p, int j0,
                      int j1,
                      const std::function<double(int, double)>& truncation_tail,
                      int oversample) {
    if (!(j1 > j0 && j0 >= 1))
        throw std::invalid_argument("rate_sweep: need j1 > j0 >= 1");
    if (r < 1) throw std::invalid_argument("rate_sweep: r must be >= 1");

    RateReport rep;
    rep.r = r;

    const bool parseval = p == LpExponent::two();
    std::vector<double> energy;
    if (parseval) energy = f.block_energies();

    bool all_zero = true;
    for (int j = j0; j <= j1; ++j) {
        const double rho = 1.0 - std::ldexp(1.0, -j);
        double err;
        if (parseval) {
            double acc = 0.0;
            for (std::size_t nu = 0; nu < energy.size(); ++nu) {
                const double gap =
                    1.0 - lambda_coeff(static_cast<long>(nu), r, rho);
                acc += gap * gap * energy[nu];
            }
            err = std::sqrt(acc);
        } else {
            err = function_norm(f - tap_mean(f, TapParameters(rho, r)), p,
                                oversample);
        }
        RatePoint pt;
        pt.j = j;
        pt.rho = rho;
        pt.error = err;
        pt.fitted = 0.0;
        pt.residual = 0.0;
        pt.noise_floor = err > 0.0 && err < 1e-13;
        pt.truncation_limited =
            truncation_tail && truncation_tail(j, rho) > 0.01 * err;
        all_zero = all_zero && err == 0.0;
        rep.points.push_back(pt);
    }
    rep.exact_reproduction = all_zero;
    if (all_zero) return rep;

    std::vector<double> xs, ys;
    for (const RatePoint& pt : rep.points) {
        if (pt.error <= 0.0 || pt.noise_floor || pt.truncation_limited) continue;
        xs.push_back(1.0 - pt.rho);
        ys.push_back(pt.error);
    }
    rep.fitted_points = static_cast<int>(xs.size());
    if (xs.size() >= 3) {
        const SlopeFit fit = slope_fit(xs, ys);
        rep.slope = fit.slope;
        rep.intercept = fit.intercept;
        rep.residual = fit.residual;
        rep.fit_valid = true;
        for (RatePoint& pt : rep.points) {
            const double lx = std::log(1.0 - pt.rho);
            pt.fitted = std::exp(rep.intercept + rep.slope * lx);
            pt.residual = pt.error > 0.0
                              ? std::log(pt.error) - (rep.intercept + rep.slope * lx)
                              : 0.0;
        }
    }
    return rep;
}

TheoremFunction build_theorem_function(const DecaySpec& base, int r, int n,
                                       double alpha) {
    if (n < 1 || r < n)
        throw std::invalid_argument("build_theorem_function: need 1 <= n <= r");
    if (!(alpha > 0.0 && alpha < static_cast<double>(n)))
        throw std::invalid_argument("build_theorem_function: need 0 < alpha < n");
    const int m = r - n;

    DecaySpec spec_g = base;
    spec_g.s = alpha + 0.5;
    SpectralFunction g = generate_test_function(spec_g);
    if (m >= 1) {
        // a radial derivative of order m has no blocks below m
        g -= partial_sum(g, m - 1);
    }

    const int nu_max = g.box().nu_max();
    SpectralFunction f = g;
    if (m >= 1) {
        std::vector<double> inv(static_cast<std::size_t>(nu_max) + 1, 0.0);
        for (int nu = m; nu <= nu_max; ++nu)
            inv[static_cast<std::size_t>(nu)] =
                1.0 / falling_factorial(nu, m);
        f = apply(BlockMultiplier(std::move(inv), "radial-preimage"), g);
    }

    TheoremFunction out{r, n, alpha, std::move(f), std::move(g), {}, {}};
    out.oracle_energy_f.assign(static_cast<std::size_t>(nu_max) + 1, 0.0);
    out.oracle_energy_g.assign(static_cast<std::size_t>(nu_max) + 1, 0.0);
    for (int nu = m; nu <= nu_max; ++nu) {
        const double c = decay_magnitude(spec_g, nu);
        out.oracle_energy_g[static_cast<std::size_t>(nu)] = c * c;
        const double cf = m == 0 ? c : c / falling_factorial(nu, m);
        out.oracle_energy_f[static_cast<std::size_t>(nu)] = cf * cf;
    }
    return out;
}

namespace {

// truncation tail bound for a decay family: c_top * top^r * rho^top
std::function<double(int, double)> family_tail(const std::vector<double>& energy,
                                               int r) {
    const std::size_t top = energy.size() - 1;
    const double c_top = std::sqrt(energy[top]);
    return [c_top, top, r](int, double rho) {
        return c_top *
               std::pow(static_cast<double>(top), static_cast<double>(r)) *
               std::pow(rho, static_cast<double>(top));
    };
}

double oracle_error(const std::vector<double>& energy, int r, double rho) {
    double acc = 0.0;
    for (std::size_t nu = 0; nu < energy.size(); ++nu) {
        const double gap = 1.0 - lambda_coeff(static_cast<long>(nu), r, rho);
        acc += gap * gap * energy[nu];
    }
    return std::sqrt(acc);
}

}  // namespace

DirectReport direct_theorem_experiment(const DecaySpec& base, int r, int n,
                                       double alpha, LpExponent p, int j0,
                                       int j1) {
    const TheoremFunction tf = build_theorem_function(base, r, n, alpha);

    DirectReport rep;
    rep.r = r;
    rep.n = n;
    rep.alpha = alpha;
    rep.target_slope = static_cast<double>(r - n) + alpha;

    const auto tail = family_tail(tf.oracle_energy_f, r);
    rep.rate = rate_sweep(tf.f, r, p, j0, j1, tail);

    // independent oracle: plain scalar sums over the designed block energies
    std::vector<double> oxs, oys;
    double max_dev = 0.0;
    for (const RatePoint& pt : rep.rate.points) {
        const double oe = oracle_error(tf.oracle_energy_f, r, pt.rho);
        rep.oracle_errors.push_back(oe);
        if (pt.error <= 0.0 || pt.noise_floor || pt.truncation_limited) continue;
        if (p == LpExponent::two() && oe > 0.0)
            max_dev = std::max(max_dev, std::abs(pt.error - oe) / oe);
        oxs.push_back(1.0 - pt.rho);
        oys.push_back(oe);
    }
    rep.oracle_max_rel_dev = max_dev;
    if (oxs.size() >= 3) rep.oracle_slope = slope_fit(oxs, oys).slope;

    // hypothesis: K_n(δ, g) fits slope α over the same usable window
    const std::vector<double> g_energy = tf.g.block_energies();
    std::vector<double> kxs, kys;
    for (const RatePoint& pt : rep.rate.points) {
        if (pt.error <= 0.0 || pt.noise_floor || pt.truncation_limited) continue;
        const double delta = 1.0 - pt.rho;
        const double kv = k_functional_p2_value(g_energy, delta, n);
        if (kv > 0.0) {
            kxs.push_back(delta);
            kys.push_back(kv);
        }
    }
    if (kxs.size() >= 3) {
        rep.hypothesis_slope = slope_fit(kxs, kys).slope;
        rep.hypothesis_ok = std::abs(rep.hypothesis_slope - alpha) <= 0.15;
    }
    rep.slope_ok = rep.rate.fit_valid &&
                   std::abs(rep.rate.slope - rep.target_slope) <= 0.15;
    return rep;
}

InverseReport inverse_theorem_experiment(const DecaySpec& base, int r, int n,
                                         double alpha, LpExponent p, int j0,
                                         int j1) {
    if (!(p == LpExponent::two()))
        throw std::invalid_argument(
            "inverse_theorem_experiment: certificates are evaluated at p = 2");

    InverseReport rep;
    rep.r = r;
    rep.n = n;
    rep.alpha = alpha;

    // ω must clear the ZBS screening before any certificate is asserted
    std::vector<double> deltas;
    for (int j = j0; j <= j1; ++j) deltas.push_back(std::ldexp(1.0, -j));
    const Modulus omega = power_modulus(alpha);
    rep.zbs = zbs_check(omega, n, deltas);
    if (!rep.zbs.usable(n)) {
        rep.refused = true;
        rep.refusal_reason = !rep.zbs.conditions.all()
                                 ? "modulus fails conditions: " + rep.zbs.conditions.failure
                                 : (!rep.zbs.z_bounded ? "modulus fails (Z)"
                                                       : "modulus fails (Z_n)");
        return rep;
    }

    const TheoremFunction tf = build_theorem_function(base, r, n, alpha);
    const auto tail = family_tail(tf.oracle_energy_f, r);
    const std::vector<double> f_energy = tf.f.block_energies();
    const std::vector<double> g_energy = tf.g.block_energies();

    for (int j = j0; j <= j1; ++j) {
        const double delta = std::ldexp(1.0, -j);
        const double rho = 1.0 - delta;
        // skip truncation-limited points, mirroring the direct experiment
        const double err = oracle_error(tf.oracle_energy_f, r, rho);
        if (tail(j, rho) > 0.01 * err) continue;

        // M_2 via block sums (the p = 2 Parseval route)
        double acc = 0.0;
        for (std::size_t nu = 0; nu < f_energy.size(); ++nu) {
            const double mu = falling_factorial(static_cast<long>(nu), r) *
                              std::pow(rho, static_cast<double>(nu) - r);
            acc += mu * mu * f_energy[nu];
        }
        const double mp = std::pow(rho, r) * std::sqrt(acc);
        const double w = omega(delta);
        rep.js.push_back(j);
        rep.mp_ratios.push_back(std::pow(delta, n) * mp / w);
        rep.k_ratios.push_back(k_functional_p2_value(g_energy, delta, n) / w);
    }

    auto band = [](const std::vector<double>& v) {
        if (v.empty()) return 0.0;
        double lo = v[0], hi = v[0];
        for (double x : v) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        return lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    };
    rep.mp_band = band(rep.mp_ratios);
    rep.k_band = band(rep.k_ratios);
    return rep;
}

}  // namespace tap
