#include "tap/block_multiplier.hpp"

#include <algorithm>
#include <stdexcept>

namespace tap {

BlockMultiplier::BlockMultiplier(std::vector<double> v, std::string lbl)
    : label(std::move(lbl)) {
    values.reserve(v.size());
    for (double x : v) values.emplace_back(x, 0.0);
}

bool BlockMultiplier::is_real(double tol) const {
    for (const Complex& v : values)
        if (std::abs(v.imag()) > tol) return false;
    return true;
}

BlockMultiplier compose(const BlockMultiplier& a, const BlockMultiplier& b) {
    const std::size_t n = std::min(a.values.size(), b.values.size());
    std::vector<Complex> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a.values[i] * b.values[i];
    return BlockMultiplier(std::move(out), a.label + "*" + b.label);
}

SpectralFunction apply(const BlockMultiplier& mult, const SpectralFunction& f) {
    const int need = f.max_degree();
    if (mult.nu_max() < need)
        throw std::invalid_argument(
            "apply: multiplier defined only up to nu_max=" +
            std::to_string(mult.nu_max()) + ", function has degree " +
            std::to_string(need));
    SpectralFunction g = f;
    const auto& mu = mult.values;
    const int cover = mult.nu_max();
    auto& c = g.coeffs();
    for_each_index(f.box(), [&](std::size_t flat, std::span<const int>, long nu) {
        if (nu <= cover)
            c[flat] *= mu[static_cast<std::size_t>(nu)];
        else
            c[flat] = Complex(0.0, 0.0);  // no nonzero coefficients out here
    });
    if (!mult.is_real()) g.set_real_valued(false);
    return g;
}

}  // namespace tap
