#pragma once

#include "tap/block_multiplier.hpp"
#include "tap/sample_field.hpp"
#include "tap/spectral_function.hpp"

namespace tap {

/// Parameters of the Taylor-Abel-Poisson mean A_{ρ,r}.
struct TapParameters {
    double rho;  // in [0, 1)
    int r;       // >= 1

    TapParameters(double rho_, int r_);
};

/// λ_{ν,r}(ρ): 1 for ν < r, otherwise the binomial tail
///   Σ_{j=0}^{r-1} C(ν,j) (1-ρ)^j ρ^{ν-j},
/// i.e. the CDF of Binomial(ν, 1-ρ) at r-1.  Always in [0,1].  Accepts
/// ρ in [0,1]; evaluated by a positive-term recurrence, falling back to
/// log-space when ρ^ν underflows.
double lambda_coeff(long nu, int r, double rho);

/// ν (ν-1) ... (ν-n+1) as a double; 0 for ν < n, 1 for n = 0.
double falling_factorial(long nu, int n);

// Multiplier factories.  nu_max must cover the target function's degree;
// operator wrappers below always use d·K of their argument.
BlockMultiplier identity_multiplier(int nu_max);
BlockMultiplier poisson_multiplier(int nu_max, double rho);           // ρ^ν
BlockMultiplier tap_multiplier(int nu_max, const TapParameters& prm); // λ_{ν,r}(ρ)
BlockMultiplier radial_multiplier(int nu_max, int n);                 // ν!/(ν-n)!, 0 below n
BlockMultiplier rho_derivative_multiplier(int nu_max, double rho, int j);
BlockMultiplier leis_multiplier(int nu_max, double rho, int r);

/// Abel-Poisson mean: block multiplier ρ^ν (0^0 := 1).
SpectralFunction poisson_mean(const SpectralFunction& f, double rho);

/// Taylor-Abel-Poisson mean A_{ρ,r}: block multiplier λ_{ν,r}(ρ).
/// A_{ρ,1} coincides with the Poisson mean; A_{0,r} keeps |k|_1 <= r-1.
SpectralFunction tap_mean(const SpectralFunction& f, const TapParameters& prm);

/// Radial derivative of order n: block multiplier ν!/(ν-n)! (0 for ν < n).
SpectralFunction radial_derivative(const SpectralFunction& f, int n);

/// j-th ρ-derivative of the Poisson mean:
///   μ_ν = ν!/(ν-j)! ρ^{ν-j}  (0 for ν < j).
SpectralFunction poisson_rho_derivative(const SpectralFunction& f, double rho,
                                        int j);

/// Taylor-polynomial form Σ_{j<r} (∂^j_ρ Poisson)(f) (1-ρ)^j / j!, summed
/// term by term.  Deliberately a separate code path from tap_mean: the two
/// must agree, and tests exploit that.
SpectralFunction taylor_form(const SpectralFunction& f,
                             const TapParameters& prm);

/// Comparison operator built on the normal derivative (which acts as -ν per
/// block): μ_ν = Σ_{k<r} (ν(ρ-1))^k / k!, a truncated exponential.  Defined
/// here for every d by the same block rule.
SpectralFunction leis_mean(const SpectralFunction& f, double rho, int r);

/// Samples of the closed-form Y-restricted Poisson kernel
///   Π_j 1/(1-ρ e^{i x_j}) + Π_j 1/(1-ρ e^{-i x_j}) - 1
/// on the uniform m^d grid.  Its Fourier coefficients are ρ^ν on Y and 0 off
/// Y.  Real-valued.
SampleField y_poisson_kernel(double rho, int d, int m);

}  // namespace tap
