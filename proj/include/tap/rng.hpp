#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace tap {

/// Deterministic RNG used throughout the experiments.  Doubles are formed
/// directly from the top 53 bits of mt19937_64 output, so streams are
/// reproducible bit for bit across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    double uniform() {  // in [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Integer in [0, n)
    std::uint64_t uniform_index(std::uint64_t n) {
        return eng_() % n;  // desk-scale bias is irrelevant here
    }

    std::complex<double> unit_phase() {
        const double ang = uniform(0.0, 6.283185307179586476925286766559);
        return {std::cos(ang), std::sin(ang)};
    }

    std::complex<double> complex_in_disc() {
        // rejection sampling of the unit disc
        for (;;) {
            const double x = uniform(-1.0, 1.0), y = uniform(-1.0, 1.0);
            if (x * x + y * y <= 1.0) return {x, y};
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace tap
