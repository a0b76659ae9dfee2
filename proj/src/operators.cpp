#include "tap/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tap {

TapParameters::TapParameters(double rho_, int r_) : rho(rho_), r(r_) {
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("TapParameters: rho must lie in [0,1)");
    if (r < 1) throw std::invalid_argument("TapParameters: r must be >= 1");
}

double lambda_coeff(long nu, int r, double rho) {
    if (nu < 0) throw std::invalid_argument("lambda_coeff: nu must be >= 0");
    if (r < 1) throw std::invalid_argument("lambda_coeff: r must be >= 1");
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("lambda_coeff: rho must lie in [0,1]");
    if (nu < r) return 1.0;
    if (rho == 0.0) return 0.0;
    if (rho == 1.0) return 1.0;

    const double log_rho = std::log(rho);
    double sum;
    if (static_cast<double>(nu) * log_rho > -700.0) {
        // positive-term recurrence: term_{j+1} = term_j (nu-j)/(j+1) (1-rho)/rho
        double term = std::pow(rho, static_cast<double>(nu));
        sum = term;
        const double ratio = (1.0 - rho) / rho;
        for (int j = 0; j + 1 < r; ++j) {
            term *= ratio * static_cast<double>(nu - j) / static_cast<double>(j + 1);
            sum += term;
        }
    } else {
        // rho^nu underflows; assemble the few terms in log space
        sum = 0.0;
        const double lg_nu1 = std::lgamma(static_cast<double>(nu) + 1.0);
        for (int j = 0; j < r && j <= nu; ++j) {
            const double lt = lg_nu1 - std::lgamma(static_cast<double>(j) + 1.0) -
                              std::lgamma(static_cast<double>(nu - j) + 1.0) +
                              static_cast<double>(j) * std::log1p(-rho) +
                              static_cast<double>(nu - j) * log_rho;
            if (lt > -745.0) sum += std::exp(lt);
        }
    }
    return std::min(sum, 1.0);
}

double falling_factorial(long nu, int n) {
    if (n < 0) throw std::invalid_argument("falling_factorial: n must be >= 0");
    if (nu < n) return 0.0;
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= static_cast<double>(nu - i);
    return p;
}

BlockMultiplier identity_multiplier(int nu_max) {
    return BlockMultiplier(std::vector<double>(static_cast<std::size_t>(nu_max) + 1, 1.0),
                           "identity");
}

BlockMultiplier poisson_multiplier(int nu_max, double rho) {
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("poisson_multiplier: rho must lie in [0,1)");
    std::vector<double> v(static_cast<std::size_t>(nu_max) + 1);
    double p = 1.0;  // 0^0 := 1
    for (int nu = 0; nu <= nu_max; ++nu, p *= rho) v[static_cast<std::size_t>(nu)] = p;
    return BlockMultiplier(std::move(v), "poisson");
}

BlockMultiplier tap_multiplier(int nu_max, const TapParameters& prm) {
    std::vector<double> v(static_cast<std::size_t>(nu_max) + 1);
    for (int nu = 0; nu <= nu_max; ++nu)
        v[static_cast<std::size_t>(nu)] = lambda_coeff(nu, prm.r, prm.rho);
    return BlockMultiplier(std::move(v), "tap");
}

BlockMultiplier radial_multiplier(int nu_max, int n) {
    if (n < 1) throw std::invalid_argument("radial_multiplier: n must be >= 1");
    std::vector<double> v(static_cast<std::size_t>(nu_max) + 1, 0.0);
    if (n <= nu_max) {
        // product recurrence from nu = n upward
        double p = falling_factorial(n, n);  // n!
        for (int nu = n; nu <= nu_max; ++nu) {
            v[static_cast<std::size_t>(nu)] = p;
            p *= static_cast<double>(nu + 1) / static_cast<double>(nu + 1 - n);
        }
    }
    return BlockMultiplier(std::move(v), "radial");
}

BlockMultiplier rho_derivative_multiplier(int nu_max, double rho, int j) {
    if (j < 0)
        throw std::invalid_argument("rho_derivative_multiplier: j must be >= 0");
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("rho_derivative_multiplier: rho must lie in [0,1)");
    std::vector<double> v(static_cast<std::size_t>(nu_max) + 1, 0.0);
    double zpow = 1.0;  // rho^{nu-j}, 0^0 := 1
    for (int nu = j; nu <= nu_max; ++nu, zpow *= rho)
        v[static_cast<std::size_t>(nu)] = falling_factorial(nu, j) * zpow;
    return BlockMultiplier(std::move(v), "rho-derivative");
}

BlockMultiplier leis_multiplier(int nu_max, double rho, int r) {
    if (r < 1) throw std::invalid_argument("leis_multiplier: r must be >= 1");
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("leis_multiplier: rho must lie in [0,1)");
    std::vector<double> v(static_cast<std::size_t>(nu_max) + 1);
    for (int nu = 0; nu <= nu_max; ++nu) {
        // truncated exponential Σ_{k<r} (nu (rho-1))^k / k!
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < r; ++k) {
            term *= static_cast<double>(nu) * (rho - 1.0) / static_cast<double>(k);
            sum += term;
        }
        v[static_cast<std::size_t>(nu)] = sum;
    }
    return BlockMultiplier(std::move(v), "leis");
}

SpectralFunction poisson_mean(const SpectralFunction& f, double rho) {
    return apply(poisson_multiplier(f.box().nu_max(), rho), f);
}

SpectralFunction tap_mean(const SpectralFunction& f, const TapParameters& prm) {
    return apply(tap_multiplier(f.box().nu_max(), prm), f);
}

SpectralFunction radial_derivative(const SpectralFunction& f, int n) {
    return apply(radial_multiplier(f.box().nu_max(), n), f);
}

SpectralFunction poisson_rho_derivative(const SpectralFunction& f, double rho, int j) {
    return apply(rho_derivative_multiplier(f.box().nu_max(), rho, j), f);
}

SpectralFunction taylor_form(const SpectralFunction& f, const TapParameters& prm) {
    SpectralFunction acc = poisson_mean(f, prm.rho);  // j = 0 term
    double coef = 1.0;
    for (int j = 1; j < prm.r; ++j) {
        coef *= (1.0 - prm.rho) / static_cast<double>(j);  // (1-rho)^j / j!
        SpectralFunction term = poisson_rho_derivative(f, prm.rho, j);
        term *= coef;
        acc += term;
    }
    acc.set_real_valued(f.real_valued());
    return acc;
}

SpectralFunction leis_mean(const SpectralFunction& f, double rho, int r) {
    return apply(leis_multiplier(f.box().nu_max(), rho, r), f);
}

SampleField y_poisson_kernel(double rho, int d, int m) {
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("y_poisson_kernel: rho must lie in [0,1)");
    SampleField out(d, m);
    // per-axis factors 1/(1 - rho e^{i x_t}) on the grid
    std::vector<std::complex<double>> fac(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t) {
        const double x = 2.0 * std::numbers::pi * static_cast<double>(t) /
                         static_cast<double>(m);
        fac[static_cast<std::size_t>(t)] =
            1.0 / (1.0 - rho * std::polar(1.0, x));
    }
    std::vector<int> t(static_cast<std::size_t>(d), 0);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        std::complex<double> prod(1.0, 0.0);
        for (int j = 0; j < d; ++j) prod *= fac[static_cast<std::size_t>(t[static_cast<std::size_t>(j)])];
        // the two conjugate products sum to twice the real part
        out.values[flat] = std::complex<double>(2.0 * prod.real() - 1.0, 0.0);
        for (int j = d - 1; j >= 0; --j) {
            if (++t[static_cast<std::size_t>(j)] < m) break;
            t[static_cast<std::size_t>(j)] = 0;
        }
    }
    return out;
}

}  // namespace tap
