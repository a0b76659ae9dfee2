#pragma once

#include <complex>
#include <vector>

#include "tap/lp_exponent.hpp"

namespace tap {

/// Samples of a function on the uniform tensor grid x_t = 2π t / m,
/// t in {0,..,m-1}^d, stored row-major (last axis fastest).  Averaging over
/// the grid realizes the normalized torus measure.
struct SampleField {
    int d;
    int m;
    std::vector<std::complex<double>> values;

    SampleField(int d_, int m_);
    std::size_t size() const { return values.size(); }
};

/// Grid L_p norm: (m^{-d} Σ_t |v_t|^p)^{1/p}, or max_t |v_t| for p = inf.
/// Exact for trigonometric polynomials at p = 2 when m exceeds twice the
/// degree; a quadrature approximation otherwise.
double lp_norm(const SampleField& s, LpExponent p);

double max_abs_imag(const SampleField& s);

/// max_t |a_t - b_t|
double linf_distance(const SampleField& a, const SampleField& b);

}  // namespace tap
