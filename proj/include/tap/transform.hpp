#pragma once

#include "tap/sample_field.hpp"
#include "tap/spectral_function.hpp"

namespace tap {

/// Evaluates f on the uniform m^d grid:
///   values(t) = Σ_k coeff(k) exp(i <k, 2π t / m>).
/// Requires m >= 2K+1 so the samples determine the polynomial exactly.
SampleField synthesize(const SpectralFunction& f, int m);

/// Discrete Fourier analysis back to the coefficient box:
///   coeff(k) = m^{-d} Σ_t values(t) exp(-i <k, 2π t / m>),  |k_j| <= K.
/// Inverse of synthesize on degree-K polynomials when m >= 2K+1.
SpectralFunction analyze(const SampleField& s, int K, bool real_valued = false);

}  // namespace tap
