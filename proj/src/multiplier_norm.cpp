#include "tap/multiplier_norm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tap/rng.hpp"
#include "tap/transform.hpp"

namespace tap {

namespace {

// Y-kernel with coefficients μ_ν on Y up to ℓ1 degree nu_cap; the box side
// must reach nu_cap so every Y index of that degree fits.
SpectralFunction y_kernel(const BlockMultiplier& mult, int d, int nu_cap) {
    SpectralFunction g(d, nu_cap);
    auto& c = g.coeffs();
    for_each_index(g.box(), [&](std::size_t flat, std::span<const int> k, long nu) {
        if (nu <= nu_cap && in_y(k))
            c[flat] = mult.values[static_cast<std::size_t>(nu)];
    });
    return g;
}

// Random Y-supported test function on the (d, K) box.
SpectralFunction random_y_function(int d, int K, Rng& rng) {
    SpectralFunction f(d, K);
    auto& c = f.coeffs();
    for_each_index(f.box(), [&](std::size_t flat, std::span<const int> k, long) {
        if (in_y(k)) c[flat] = rng.complex_in_disc();
    });
    return f;
}

}  // namespace

MultiplierNormEstimate multiplier_norm(const BlockMultiplier& mult, int d,
                                       LpExponent p, int K, int oversample,
                                       int corpus, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("multiplier_norm: d must be >= 1");
    if (K < 1) throw std::invalid_argument("multiplier_norm: K must be >= 1");
    const int nu_cap = d * K;
    if (mult.nu_max() < nu_cap)
        throw std::invalid_argument(
            "multiplier_norm: multiplier must cover nu_max = d*K");

    MultiplierNormEstimate est{d, p, nu_cap, 0.0, 0.0, false, 0, 0};

    if (p == LpExponent::two()) {
        double sup = 0.0;
        for (int nu = 0; nu <= nu_cap; ++nu)
            sup = std::max(sup, std::abs(mult.values[static_cast<std::size_t>(nu)]));
        est.lower = est.upper = sup;
        est.exact = true;
        return est;
    }

    // lower bound: ratio corpus (constants included via the first entry)
    const int mf = oversample * (2 * K + 1);
    est.corpus_grid = mf;
    Rng rng(seed);
    double lower = 0.0;
    for (int i = 0; i < corpus; ++i) {
        SpectralFunction f =
            i == 0 ? unit_mode(d, K, std::vector<int>(static_cast<std::size_t>(d), 0))
                   : random_y_function(d, K, rng);
        const double nf = lp_norm(synthesize(f, mf), p);
        if (nf <= 0.0) continue;
        const double ng = lp_norm(synthesize(apply(mult, f), mf), p);
        lower = std::max(lower, ng / nf);
    }
    est.lower = lower;

    if (p == LpExponent::one() || p.is_infinity()) {
        const int mk = oversample * (2 * nu_cap + 1);
        est.kernel_grid = mk;
        est.upper = lp_norm(synthesize(y_kernel(mult, d, nu_cap), mk),
                            LpExponent::one());
    } else {
        est.upper = std::numeric_limits<double>::infinity();
    }
    return est;
}

}  // namespace tap
