#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace tap {

/// Majorant ω(t) on [0,1] used to state approximation rates.  Candidates are
/// screened against the classical admissibility conditions (continuous,
/// nondecreasing, positive on (0,1], vanishing at 0) and the
/// Zygmund-Bari-Stechkin integral conditions.
class Modulus {
public:
    Modulus(std::function<double(double)> eval, std::string label)
        : eval_(std::move(eval)), label_(std::move(label)) {}

    double operator()(double t) const { return eval_(t); }
    const std::string& label() const { return label_; }

private:
    std::function<double(double)> eval_;
    std::string label_;
};

Modulus power_modulus(double alpha);                    // t^alpha
Modulus power_log_modulus(double alpha, double beta);   // t^alpha ln^beta(e/t)

/// Piecewise-linear interpolant through (t, ω) pairs; t values must be
/// strictly increasing within [0,1].
Modulus tabulated_modulus(std::vector<std::pair<double, double>> pts);

/// "power:0.5" | "power-log:0.5,1" | "custom:t=w,t=w,..."
Modulus parse_modulus(const std::string& spec);

/// Sampled screening of the admissibility conditions.
struct ModulusConditions {
    bool continuous = false;
    bool nondecreasing = false;
    bool positive = false;
    bool vanishes_at_zero = false;
    std::string failure;  // first violated condition, empty when all hold

    bool all() const {
        return continuous && nondecreasing && positive && vanishes_at_zero;
    }
};

ModulusConditions check_conditions(const Modulus& w, int samples = 2048);

/// Result of the integral-condition check over a decreasing δ grid.
/// z_ratio[i]  = (∫_0^δ ω/t dt) / ω(δ)
/// zn_ratio[i] = (∫_δ^1 ω/t^{n+1} dt) / (ω(δ)/δ^n)
/// A condition is reported unbounded when its ratio keeps growing toward the
/// small-δ end of the grid or its integral fails to converge.
struct ZbsReport {
    ModulusConditions conditions;
    int n = 1;
    std::vector<double> deltas;
    std::vector<double> z_ratio;
    std::vector<double> zn_ratio;
    bool z_bounded = false;
    bool zn_bounded = false;
    bool z_diverged = false;  // lower-end integral did not converge at all
    double z_sup = 0.0;
    double zn_sup = 0.0;

    bool usable(int order) const {  // conditions + (Z) (+ (Z_n) for order >= 1)
        return conditions.all() && z_bounded && (order < 1 || zn_bounded);
    }
};

/// Evaluates both ratio sequences over the δ grid.  The lower-end integral is
/// handled by the substitution t = δ e^{-u}; quadrature is adaptive with the
/// given tolerance.  Condition screening failures are reported in the result
/// rather than thrown.
ZbsReport zbs_check(const Modulus& w, int n, std::vector<double> deltas,
                    double quad_tol = 1e-12);

}  // namespace tap
