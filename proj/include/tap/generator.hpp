#pragma once

#include <cstdint>

#include "tap/spectral_function.hpp"

namespace tap {

enum class Support { Full, YOnly };

/// Recipe for a test function with prescribed block ℓ2 energies: block ν
/// carries magnitude c_ν = (ν+1)^{-s}, spread over the block per `per_block`.
struct DecaySpec {
    int d = 1;
    int K = 8;
    double s = 1.0;
    std::uint64_t seed = 42;
    Support support = Support::Full;
    int per_block = 0;        // 0: every index of the block, equal split
                              // 1: a single randomly placed index
    bool real_valued = false; // build Hermitian pairs
};

double decay_magnitude(const DecaySpec& spec, long nu);  // (ν+1)^{-s}

/// Deterministic under the seed; block energies equal c_ν² exactly by
/// construction (up to a unit-phase rounding).
SpectralFunction generate_test_function(const DecaySpec& spec);

}  // namespace tap
