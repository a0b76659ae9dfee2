#pragma once

#include <functional>
#include <vector>

namespace tap {

/// Gauss-Legendre nodes and weights on [-1, 1]; exact for polynomials of
/// degree 2n-1.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Computes (and caches) the n-point rule via Newton iteration on P_n.
const GaussLegendreRule& gauss_legendre(int n);

/// ∫_a^b f dx with the n-point rule mapped onto [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n);

/// Adaptive bisection built on nested Gauss-Legendre panels.  Splits until
/// the local refinement error drops under tol (scaled by interval share).
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-12, int max_depth = 48);

}  // namespace tap
