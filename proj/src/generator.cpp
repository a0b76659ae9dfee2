#include "tap/generator.hpp"

#include <cmath>
#include <stdexcept>

#include "tap/rng.hpp"

namespace tap {

double decay_magnitude(const DecaySpec& spec, long nu) {
    return std::pow(static_cast<double>(nu) + 1.0, -spec.s);
}

namespace {

// One index with |k|_1 = nu inside the box, components drawn by splitting nu
// across the axes; signs random, or aligned when the index must lie in Y.
std::vector<int> random_block_index(const DecaySpec& spec, long nu, Rng& rng) {
    const int d = spec.d, K = spec.K;
    std::vector<int> k(static_cast<std::size_t>(d), 0);
    long rest = nu;
    for (int j = 0; j < d; ++j) {
        const long axes_left = d - 1 - j;
        const long lo = std::max(0L, rest - axes_left * K);
        const long hi = std::min(rest, static_cast<long>(K));
        const long mag =
            lo == hi ? lo : lo + static_cast<long>(rng.uniform_index(
                                     static_cast<std::uint64_t>(hi - lo + 1)));
        k[static_cast<std::size_t>(j)] = static_cast<int>(mag);
        rest -= mag;
    }
    if (spec.support == Support::YOnly) {
        bool has_zero = false;
        for (int c : k) has_zero = has_zero || c == 0;
        // all-negative needs every component < 0
        if (!has_zero && rng.uniform() < 0.5)
            for (int& c : k) c = -c;
    } else {
        for (int& c : k)
            if (c != 0 && rng.uniform() < 0.5) c = -c;
    }
    return k;
}

}  // namespace

SpectralFunction generate_test_function(const DecaySpec& spec) {
    if (!(spec.s > 0.0))
        throw std::invalid_argument("generate_test_function: s must be > 0");
    if (spec.per_block != 0 && spec.per_block != 1)
        throw std::invalid_argument("generate_test_function: per_block must be 0 or 1");

    SpectralFunction f(spec.d, spec.K, spec.real_valued);
    Rng rng(spec.seed);
    const int nu_max = f.box().nu_max();

    if (spec.per_block == 1) {
        std::vector<int> neg(static_cast<std::size_t>(spec.d));
        for (int nu = 0; nu <= nu_max; ++nu) {
            const double c = decay_magnitude(spec, nu);
            const std::vector<int> k = random_block_index(spec, nu, rng);
            if (!spec.real_valued) {
                f.set_coeff(k, c * rng.unit_phase());
                continue;
            }
            if (nu == 0) {
                f.set_coeff(k, Complex(c, 0.0));
                continue;
            }
            // Hermitian pair at half the energy each
            const Complex v = (c / std::sqrt(2.0)) * rng.unit_phase();
            for (int j = 0; j < spec.d; ++j)
                neg[static_cast<std::size_t>(j)] = -k[static_cast<std::size_t>(j)];
            f.set_coeff(k, v);
            f.set_coeff(neg, std::conj(v));
        }
        return f;
    }

    // per_block == 0: equal magnitude split over the whole block
    const std::vector<std::uint64_t> sizes = spec.support == Support::YOnly
                                                 ? block_sizes_y(f.box())
                                                 : block_sizes(f.box());
    std::vector<double> mag(static_cast<std::size_t>(nu_max) + 1, 0.0);
    for (int nu = 0; nu <= nu_max; ++nu) {
        const std::uint64_t n = sizes[static_cast<std::size_t>(nu)];
        if (n > 0)
            mag[static_cast<std::size_t>(nu)] =
                decay_magnitude(spec, nu) / std::sqrt(static_cast<double>(n));
    }

    auto& coeffs = f.coeffs();
    if (!spec.real_valued) {
        for_each_index(f.box(), [&](std::size_t flat, std::span<const int> k, long nu) {
            if (spec.support == Support::YOnly && !in_y(k)) return;
            coeffs[flat] = mag[static_cast<std::size_t>(nu)] * rng.unit_phase();
        });
        return f;
    }

    // real case: draw one phase per {k, -k} pair, conjugate on the mirror.
    // The mirror of the flat index i is size-1-i in this layout.
    const std::size_t total = f.size();
    for_each_index(f.box(), [&](std::size_t flat, std::span<const int> k, long nu) {
        if (spec.support == Support::YOnly && !in_y(k)) return;
        const std::size_t mirror = total - 1 - flat;
        if (flat < mirror) {
            const Complex v = mag[static_cast<std::size_t>(nu)] * rng.unit_phase();
            coeffs[flat] = v;
            coeffs[mirror] = std::conj(v);
        } else if (flat == mirror) {
            coeffs[flat] = Complex(mag[static_cast<std::size_t>(nu)], 0.0);
        }
    });
    return f;
}

}  // namespace tap
