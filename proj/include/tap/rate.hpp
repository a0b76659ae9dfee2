#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tap/analysis.hpp"
#include "tap/generator.hpp"
#include "tap/lp_exponent.hpp"
#include "tap/modulus.hpp"
#include "tap/spectral_function.hpp"

namespace tap {

/// Ordinary least squares on (log x, log y); residual is the largest
/// absolute log-deviation from the fit.  Needs >= 3 strictly positive points.
struct SlopeFit {
    double slope;
    double intercept;
    double residual;
};

SlopeFit slope_fit(std::span<const double> xs, std::span<const double> ys);

/// One point of a ρ-sweep along ρ_j = 1 - 2^{-j}.
struct RatePoint {
    int j;
    double rho;
    double error;     // ||f - A_{ρ,r}(f)||_p
    double fitted;    // value of the fitted power law (0 when no fit)
    double residual;  // log error - log fitted
    bool truncation_limited;
    bool noise_floor;
};

struct RateReport {
    int r = 0;
    std::vector<RatePoint> points;
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
    int fitted_points = 0;        // points entering the fit
    bool exact_reproduction = false;  // all errors identically zero
    bool fit_valid = false;
};

/// Sweeps ρ_j = 1 - 2^{-j}, j = j0..j1, measures ||f - A_{ρ,r}(f)||_p
/// (Parseval-exact block sums at p = 2, grid quadrature otherwise) and fits
/// the log-log slope over the usable points.  `truncation_tail(j, rho)`,
/// when given, marks points where the supplied tail bound exceeds 1% of the
/// measured error; errors under 1e-13 are flagged as noise, not failed.
RateReport rate_sweep(const SpectralFunction& f, int r, LpExponent p, int j0,
                      int j1,
                      const std::function<double(int, double)>& truncation_tail = {},
                      int oversample = 4);

/// f and g = f^[r-n] built so that g has exact block magnitudes
/// c_ν = (ν+1)^{-(α+1/2)} (blocks below r-n removed) and f is its preimage
/// under the radial derivative.  The closed-form block energies feed the
/// brute-force oracle; the tensors feed the pipeline under test.
struct TheoremFunction {
    int r;
    int n;
    double alpha;
    SpectralFunction f;
    SpectralFunction g;
    std::vector<double> oracle_energy_f;
    std::vector<double> oracle_energy_g;
};

TheoremFunction build_theorem_function(const DecaySpec& base, int r, int n,
                                       double alpha);

/// Direct-theorem experiment: checks the smoothness hypothesis
/// (K_n(δ, g) ~ δ^α) and the measured approximation rate against the target
/// slope r-n+α, cross-checking every swept error against the independent
/// block-energy oracle Σ_ν (1-λ_ν)² e_ν.
struct DirectReport {
    int r, n;
    double alpha;
    double target_slope;
    RateReport rate;
    std::vector<double> oracle_errors;   // aligned with rate.points
    double oracle_slope = 0.0;
    double oracle_max_rel_dev = 0.0;     // pipeline vs oracle, usable points
    double hypothesis_slope = 0.0;       // fit of K_n(2^{-j}, g)
    bool slope_ok = false;               // |slope - target| <= 0.15
    bool hypothesis_ok = false;          // |hypothesis - α| <= 0.15
};

DirectReport direct_theorem_experiment(const DecaySpec& base, int r, int n,
                                       double alpha, LpExponent p, int j0,
                                       int j1);

/// Inverse-theorem certificates on the same construction: boundedness of
/// (1-ρ)^n M_2(ρ, f, r) / ω(1-ρ) over the ρ-sweep and of
/// K_n(δ, g)_2 / ω(δ) over the δ-sweep, refusing to assert anything when ω
/// fails the ZBS screening.
struct InverseReport {
    int r, n;
    double alpha;
    bool refused = false;
    std::string refusal_reason;
    ZbsReport zbs;
    std::vector<int> js;
    std::vector<double> mp_ratios;
    std::vector<double> k_ratios;
    double mp_band = 0.0;  // max/min over the sweep
    double k_band = 0.0;
};

InverseReport inverse_theorem_experiment(const DecaySpec& base, int r, int n,
                                         double alpha, LpExponent p, int j0,
                                         int j1);

}  // namespace tap
