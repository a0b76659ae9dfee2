#pragma once

#include <cstdint>

#include "tap/block_multiplier.hpp"
#include "tap/lp_exponent.hpp"

namespace tap {

/// Operator-norm estimate of a block multiplier acting on Y-supported
/// functions of degree up to K per axis (ℓ1 degrees up to ν_max = d·K).
///
/// p = 2: exact, sup_{ν <= d·K} |μ_ν| — independent of d by construction,
/// which is the dimension-independence being verified.
/// p in {1, inf}: bracket.  Upper bound = grid L1 norm of the Y-kernel
/// Σ_ν μ_ν Σ_{k in Y, |k|_1 = ν} e_k (Young's convolution inequality);
/// lower bound = best ratio ||M f||_p / ||f||_p over a deterministic corpus
/// of Y-supported test functions (the constant included).
/// Other finite p: lower estimate only, upper reported as infinity.
struct MultiplierNormEstimate {
    int d;
    LpExponent p;
    int nu_max;
    double lower;
    double upper;
    bool exact;      // true on the p = 2 path
    int kernel_grid; // grid used for the kernel L1 norm (0 when exact)
    int corpus_grid; // grid used for the ratio corpus (0 when exact)
};

MultiplierNormEstimate multiplier_norm(const BlockMultiplier& mult, int d,
                                       LpExponent p, int K, int oversample = 4,
                                       int corpus = 12,
                                       std::uint64_t seed = 9001);

}  // namespace tap
