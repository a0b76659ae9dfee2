#pragma once

#include <string>
#include <vector>

#include "tap/spectral_function.hpp"

namespace tap {

/// Sequence μ_ν acting uniformly on each ℓ1-degree block: every coefficient
/// with |k|_1 = ν is multiplied by μ_ν.  values[ν] covers ν = 0 .. nu_max.
struct BlockMultiplier {
    std::vector<Complex> values;
    std::string label;

    BlockMultiplier() = default;
    BlockMultiplier(std::vector<Complex> v, std::string lbl)
        : values(std::move(v)), label(std::move(lbl)) {}
    BlockMultiplier(std::vector<double> v, std::string lbl);

    int nu_max() const { return static_cast<int>(values.size()) - 1; }
    bool is_real(double tol = 0.0) const;
};

/// Pointwise product of the sequences (commutative); defined up to the
/// shorter nu_max.
BlockMultiplier compose(const BlockMultiplier& a, const BlockMultiplier& b);

/// Applies the block action.  Rejects a multiplier whose nu_max falls short
/// of the largest degree actually present in f.  Preserves the real-valued
/// flag exactly when all μ_ν are real.
SpectralFunction apply(const BlockMultiplier& mult, const SpectralFunction& f);

}  // namespace tap
