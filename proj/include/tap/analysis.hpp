#pragma once

#include <optional>

#include "tap/lp_exponent.hpp"
#include "tap/operators.hpp"
#include "tap/sample_field.hpp"
#include "tap/spectral_function.hpp"

namespace tap {

/// Norm of f: exact Parseval value at p = 2, otherwise the grid quadrature
/// with m = oversample * (2K+1) points per axis.
double function_norm(const SpectralFunction& f, LpExponent p, int oversample = 4);

/// Realization quantity M_p(ρ, f, r) = ρ^r ||∂_ρ^r Poisson(f)||_p
///                                   = ||radial_derivative(poisson_mean(f, ρ), r)||_p.
struct MpValue {
    double rho;
    int r;
    LpExponent p;
    double value;
};

/// Computed through the radial-derivative form; `m_p_derivative_form` gives
/// the ρ-derivative route for cross-checks (the two agree to rounding).
MpValue m_p(const SpectralFunction& f, double rho, int r, LpExponent p,
            int oversample = 4);
double m_p_derivative_form(const SpectralFunction& f, double rho, int r,
                           LpExponent p, int oversample = 4);

/// K-functional estimate K_n(δ, f)_p = inf_h ||f-h||_p + δ^n ||h^[n]||_p,
/// with h ranging over the coefficient box of f.
///
/// p = 2 is the certified path: by block symmetry the optimum has
/// ĥ_k = t_ν f̂_k with t_ν >= 0, and the resulting convex objective over the
/// block scalars is minimized by projected gradient descent with backtracking
/// (plus the exact endpoint candidates h = f and h = 0, which settle the
/// kink cases).  For p != 2 the value is an upper bound built from the
/// realization at ρ = 1-δ, and `lower` is not certified.
struct KFunEstimate {
    double delta;
    int n;
    LpExponent p;
    double upper;
    double lower;
    SpectralFunction minimizer;
};

struct KFunOptions {
    int max_iterations = 100000;
    double tolerance = 1e-10;
    int oversample = 4;  // grids for the p != 2 route
};

KFunEstimate k_functional(const SpectralFunction& f, double delta, int n,
                          LpExponent p, const KFunOptions& opts = {});

/// Scalar p = 2 solver over precomputed block energies; used by sweeps that
/// do not need the minimizer materialized.
double k_functional_p2_value(const std::vector<double>& block_energy,
                             double delta, int n,
                             const KFunOptions& opts = {});

/// Two-sided realization check around the K-functional:
///   lower_term = (1-ρ)^n M_p(ρ, f, n)
///   k_value    = K_n(1-ρ, f)_p              (upper estimate)
///   upper_term = ||f - A_{ρ,n}(f)||_p + lower_term
/// The three vanish together exactly when f has degree < n.
struct SandwichReport {
    double rho;
    int n;
    double lower_term;
    double k_value;
    double upper_term;
    bool trivial;  // all three at zero
    double ratio_lower() const;  // lower_term / k_value
    double ratio_upper() const;  // k_value / upper_term
};

SandwichReport realization_sandwich(const SpectralFunction& f, double rho,
                                    int n, LpExponent p,
                                    const KFunOptions& opts = {});

/// Integral form of the approximation remainder:
///   (1/(r-1)!) ∫_ρ^1 ∂_ζ^r Poisson(f)(ζ, x) (1-ζ)^{r-1} dζ
/// evaluated per block by Gauss-Legendre quadrature that is exact for the
/// polynomial integrand, then synthesized on the m^d grid.  Must reproduce
/// synthesize(f - tap_mean(f, ρ, r)) pointwise; the quadrature route never
/// touches the λ coefficients.
SampleField remainder_integral(const SpectralFunction& f, double rho, int r,
                               int m);

}  // namespace tap
