#include "tap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tap/quadrature.hpp"
#include "tap/transform.hpp"

namespace tap {

double function_norm(const SpectralFunction& f, LpExponent p, int oversample) {
    if (p == LpExponent::two()) return f.l2_norm();
    if (oversample < 1)
        throw std::invalid_argument("function_norm: oversample must be >= 1");
    const int m = oversample * (2 * f.degree() + 1);
    return lp_norm(synthesize(f, m), p);
}

MpValue m_p(const SpectralFunction& f, double rho, int r, LpExponent p,
            int oversample) {
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("m_p: rho must lie in [0,1)");
    if (r < 0) throw std::invalid_argument("m_p: r must be >= 0");
    const SpectralFunction pm = poisson_mean(f, rho);
    const SpectralFunction g = r == 0 ? pm : radial_derivative(pm, r);
    return MpValue{rho, r, p, function_norm(g, p, oversample)};
}

double m_p_derivative_form(const SpectralFunction& f, double rho, int r,
                           LpExponent p, int oversample) {
    if (r == 0) return function_norm(poisson_mean(f, rho), p, oversample);
    const SpectralFunction g = poisson_rho_derivative(f, rho, r);
    return std::pow(rho, r) * function_norm(g, p, oversample);
}

namespace {

struct P2Problem {
    std::vector<double> energy;  // a_ν > 0 only (active blocks)
    std::vector<double> mu2;     // μ_ν² for the same blocks
    std::vector<double> mu;      // μ_ν
    std::vector<int> block;      // block index ν
};

P2Problem active_blocks(const std::vector<double>& block_energy, int n) {
    P2Problem prob;
    for (std::size_t nu = 0; nu < block_energy.size(); ++nu) {
        if (block_energy[nu] <= 0.0) continue;
        const double mu = falling_factorial(static_cast<long>(nu), n);
        prob.energy.push_back(block_energy[nu]);
        prob.mu.push_back(mu);
        prob.mu2.push_back(mu * mu);
        prob.block.push_back(static_cast<int>(nu));
    }
    return prob;
}

struct P2Result {
    double value;
    std::vector<double> t;  // per active block
};

// minimize F(t) = sqrt(Σ a (1-t)^2) + δ^n sqrt(Σ a μ² t²) over t >= 0
P2Result solve_p2(const P2Problem& prob, double delta, int n,
                  const KFunOptions& opts) {
    const std::size_t nb = prob.energy.size();
    const double dn = std::pow(delta, n);

    auto objective = [&](const std::vector<double>& t) {
        double A = 0.0, B = 0.0;
        for (std::size_t i = 0; i < nb; ++i) {
            const double u = 1.0 - t[i];
            A += prob.energy[i] * u * u;
            B += prob.energy[i] * prob.mu2[i] * t[i] * t[i];
        }
        return std::sqrt(A) + dn * std::sqrt(B);
    };

    // exact endpoint candidates: h = f (t == 1) and h = 0 (t == 0)
    std::vector<double> t_one(nb, 1.0), t_zero(nb, 0.0);
    P2Result best{objective(t_one), t_one};
    const double at_zero = objective(t_zero);
    if (at_zero < best.value) best = {at_zero, t_zero};

    // projected gradient descent from t_ν = λ_{ν,n}(1-δ)
    std::vector<double> t(nb);
    for (std::size_t i = 0; i < nb; ++i)
        t[i] = lambda_coeff(prob.block[i], n, std::max(0.0, 1.0 - delta));

    std::vector<double> grad(nb), trial(nb);
    double f_cur = objective(t);
    if (f_cur < best.value) best = {f_cur, t};
    double step = 1.0;
    int stale = 0;
    for (int it = 0; it < opts.max_iterations; ++it) {
        double A = 0.0, B = 0.0;
        for (std::size_t i = 0; i < nb; ++i) {
            const double u = 1.0 - t[i];
            A += prob.energy[i] * u * u;
            B += prob.energy[i] * prob.mu2[i] * t[i] * t[i];
        }
        A = std::sqrt(A);
        B = std::sqrt(B);
        double gnorm2 = 0.0;
        for (std::size_t i = 0; i < nb; ++i) {
            double g = 0.0;
            if (A > 0.0) g -= prob.energy[i] * (1.0 - t[i]) / A;
            if (B > 0.0) g += dn * prob.energy[i] * prob.mu2[i] * t[i] / B;
            grad[i] = g;
            gnorm2 += g * g;
        }
        if (gnorm2 <= 1e-30) break;

        // backtracking line search with sufficient decrease
        double s = step * 2.0;
        double f_new = f_cur;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            for (std::size_t i = 0; i < nb; ++i)
                trial[i] = std::max(0.0, t[i] - s * grad[i]);
            f_new = objective(trial);
            if (f_new <= f_cur - 1e-4 * s * gnorm2) {
                accepted = true;
                break;
            }
            s *= 0.5;
        }
        if (!accepted) break;
        step = s;
        t.swap(trial);
        const double improved = f_cur - f_new;
        f_cur = f_new;
        if (f_cur < best.value) {
            best.value = f_cur;
            best.t = t;
        }
        if (improved < opts.tolerance * 1e-3 * std::max(1.0, f_cur)) {
            if (++stale >= 8) break;
        } else {
            stale = 0;
        }
    }
    return best;
}

}  // namespace

double k_functional_p2_value(const std::vector<double>& block_energy,
                             double delta, int n, const KFunOptions& opts) {
    if (!(delta > 0.0))
        throw std::invalid_argument("k_functional: delta must be > 0");
    if (n < 1) throw std::invalid_argument("k_functional: n must be >= 1");
    const P2Problem prob = active_blocks(block_energy, n);
    if (prob.energy.empty()) return 0.0;
    bool any_mu = false;
    for (double m : prob.mu)
        if (m != 0.0) any_mu = true;
    if (!any_mu) return 0.0;  // h = f has vanishing derivative
    return solve_p2(prob, delta, n, opts).value;
}

KFunEstimate k_functional(const SpectralFunction& f, double delta, int n,
                          LpExponent p, const KFunOptions& opts) {
    if (!(delta > 0.0))
        throw std::invalid_argument("k_functional: delta must be > 0");
    if (n < 1) throw std::invalid_argument("k_functional: n must be >= 1");

    if (p == LpExponent::two()) {
        const std::vector<double> energy = f.block_energies();
        const P2Problem prob = active_blocks(energy, n);
        bool any_mu = false;
        for (double m : prob.mu)
            if (m != 0.0) any_mu = true;
        if (prob.energy.empty() || !any_mu) {
            // degree below n: f is its own optimal h
            return KFunEstimate{delta, n, p, 0.0, 0.0, f};
        }
        const P2Result res = solve_p2(prob, delta, n, opts);
        // materialize h with per-block scalings of f
        std::vector<double> t_by_block(energy.size(), 0.0);
        for (std::size_t i = 0; i < res.t.size(); ++i)
            t_by_block[static_cast<std::size_t>(prob.block[i])] = res.t[i];
        SpectralFunction h = f;
        auto& c = h.coeffs();
        for_each_index(f.box(), [&](std::size_t flat, std::span<const int>, long nu) {
            c[flat] *= t_by_block[static_cast<std::size_t>(nu)];
        });
        const double lower = std::max(0.0, res.value - opts.tolerance);
        return KFunEstimate{delta, n, p, res.value, lower, std::move(h)};
    }

    // p != 2: realization surrogate at rho = 1-δ gives an upper bound only
    const double rho = std::max(0.0, 1.0 - delta);
    SpectralFunction h = tap_mean(f, TapParameters(rho, n));
    const double approx = function_norm(f - h, p, opts.oversample);
    const double realization =
        std::pow(1.0 - rho, n) * m_p(f, rho, n, p, opts.oversample).value;
    const double upper = approx + realization;
    // lower tracks the realization term; the constant is empirical, not
    // certified (see realization_sandwich for the reported ratios)
    const double lower = std::min(upper, realization);
    return KFunEstimate{delta, n, p, upper, lower, std::move(h)};
}

double SandwichReport::ratio_lower() const {
    return k_value > 0.0 ? lower_term / k_value : 1.0;
}

double SandwichReport::ratio_upper() const {
    return upper_term > 0.0 ? k_value / upper_term : 1.0;
}

SandwichReport realization_sandwich(const SpectralFunction& f, double rho,
                                    int n, LpExponent p,
                                    const KFunOptions& opts) {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("realization_sandwich: rho must lie in (0,1)");
    if (n < 1) throw std::invalid_argument("realization_sandwich: n must be >= 1");
    const double delta = 1.0 - rho;
    const double lower_term = std::pow(delta, n) * m_p(f, rho, n, p, opts.oversample).value;
    const double k_value = k_functional(f, delta, n, p, opts).upper;
    const double upper_term =
        function_norm(f - tap_mean(f, TapParameters(rho, n)), p, opts.oversample) +
        lower_term;
    const bool trivial = lower_term == 0.0 && k_value == 0.0 && upper_term == 0.0;
    return SandwichReport{rho, n, lower_term, k_value, upper_term, trivial};
}

SampleField remainder_integral(const SpectralFunction& f, double rho, int r,
                               int m) {
    if (r < 1) throw std::invalid_argument("remainder_integral: r must be >= 1");
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("remainder_integral: rho must lie in [0,1)");

    const int nu_top = f.max_degree();
    // per-block weights c_ν = (1/(r-1)!) ∫_ρ^1 ν!/(ν-r)! ζ^{ν-r} (1-ζ)^{r-1} dζ,
    // integrated exactly: the integrand has degree ν-1 <= nu_top-1
    const int nodes = std::max(1, (nu_top + r) / 2 + 1);
    const GaussLegendreRule& rule = gauss_legendre(nodes);
    double inv_fact = 1.0;
    for (int i = 2; i < r; ++i) inv_fact *= static_cast<double>(i);
    inv_fact = 1.0 / inv_fact;

    std::vector<double> weight(static_cast<std::size_t>(f.box().nu_max()) + 1, 0.0);
    const double mid = 0.5 * (rho + 1.0), half = 0.5 * (1.0 - rho);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double zeta = mid + half * rule.nodes[q];
        const double wq = rule.weights[q] * half;
        const double edge = std::pow(1.0 - zeta, r - 1);
        // ζ^{ν-r} by running product over ν
        double zpow = 1.0;
        for (int nu = r; nu <= nu_top; ++nu) {
            weight[static_cast<std::size_t>(nu)] +=
                wq * inv_fact * falling_factorial(nu, r) * zpow * edge;
            zpow *= zeta;
        }
    }

    SpectralFunction acc = apply(
        BlockMultiplier(std::move(weight), "remainder-quadrature"), f);
    return synthesize(acc, m);
}

}  // namespace tap
