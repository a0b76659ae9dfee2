#include "tap/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tap/quadrature.hpp"

namespace tap {

Modulus power_modulus(double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("power_modulus: alpha must be > 0");
    std::ostringstream lbl;
    lbl << "power:" << alpha;
    return Modulus([alpha](double t) { return t <= 0.0 ? 0.0 : std::pow(t, alpha); },
                   lbl.str());
}

Modulus power_log_modulus(double alpha, double beta) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("power_log_modulus: alpha must be > 0");
    std::ostringstream lbl;
    lbl << "power-log:" << alpha << "," << beta;
    return Modulus(
        [alpha, beta](double t) {
            if (t <= 0.0) return 0.0;
            return std::pow(t, alpha) * std::pow(1.0 - std::log(t), beta);
        },
        lbl.str());
}

Modulus tabulated_modulus(std::vector<std::pair<double, double>> pts) {
    if (pts.size() < 2)
        throw std::invalid_argument("tabulated_modulus: need at least 2 points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].first < 0.0 || pts[i].first > 1.0 || pts[i].second < 0.0)
            throw std::invalid_argument("tabulated_modulus: points must lie in [0,1] x [0,inf)");
        if (i > 0 && pts[i].first <= pts[i - 1].first)
            throw std::invalid_argument("tabulated_modulus: t values must increase");
    }
    return Modulus(
        [pts = std::move(pts)](double t) {
            if (t <= pts.front().first) return pts.front().second;
            if (t >= pts.back().first) return pts.back().second;
            auto it = std::upper_bound(
                pts.begin(), pts.end(), t,
                [](double v, const std::pair<double, double>& p) { return v < p.first; });
            const auto& hi = *it;
            const auto& lo = *(it - 1);
            const double w = (t - lo.first) / (hi.first - lo.first);
            return lo.second + w * (hi.second - lo.second);
        },
        "custom");
}

Modulus parse_modulus(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "power") {
        return power_modulus(std::stod(args));
    }
    if (kind == "power-log") {
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("parse_modulus: power-log needs alpha,beta");
        return power_log_modulus(std::stod(args.substr(0, comma)),
                                 std::stod(args.substr(comma + 1)));
    }
    if (kind == "custom") {
        std::vector<std::pair<double, double>> pts;
        std::istringstream in(args);
        std::string item;
        while (std::getline(in, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("parse_modulus: custom expects t=w pairs");
            pts.emplace_back(std::stod(item.substr(0, eq)),
                             std::stod(item.substr(eq + 1)));
        }
        return tabulated_modulus(std::move(pts));
    }
    throw std::invalid_argument("parse_modulus: unknown modulus '" + spec + "'");
}

ModulusConditions check_conditions(const Modulus& w, int samples) {
    ModulusConditions c;
    const double scale = std::max(std::abs(w(1.0)), 1e-300);

    // continuity, sampled: shrink a symmetric difference and require decay
    c.continuous = true;
    for (int i = 1; i < samples && c.continuous; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(samples);
        const double h = 1e-7;
        const double jump = std::abs(w(std::min(1.0, t + h)) - w(std::max(0.0, t - h)));
        if (jump > 1e-2 * scale) {
            const double jump2 =
                std::abs(w(std::min(1.0, t + h / 64)) - w(std::max(0.0, t - h / 64)));
            if (jump2 > 0.5 * jump) c.continuous = false;  // did not shrink: a jump
        }
    }
    if (!c.continuous && c.failure.empty()) c.failure = "continuity";

    c.nondecreasing = true;
    double prev = w(0.0);
    for (int i = 1; i <= samples; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(samples);
        const double v = w(t);
        if (v < prev - 1e-12 * scale) {
            c.nondecreasing = false;
            break;
        }
        prev = v;
    }
    if (!c.nondecreasing && c.failure.empty()) c.failure = "monotonicity";

    c.positive = true;
    for (int i = 1; i <= samples; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(samples);
        if (!(w(t) > 0.0)) {
            c.positive = false;
            break;
        }
    }
    if (!c.positive && c.failure.empty()) c.failure = "positivity";

    // vanishing at 0, sampled limit: decay along a geometric sequence
    c.vanishes_at_zero = true;
    double last = w(1.0);
    bool decays = true;
    for (double t = 1e-3; t >= 1e-15; t *= 1e-3) {
        const double v = w(t);
        if (!(v <= 0.97 * last + 1e-300)) decays = false;
        last = v;
    }
    if (!(decays || w(1e-15) <= 1e-6 * scale)) c.vanishes_at_zero = false;
    if (!c.vanishes_at_zero && c.failure.empty()) c.failure = "limit at zero";

    return c;
}

namespace {

// ∫_0^δ ω(t)/t dt = ∫_0^∞ ω(δ e^{-u}) du, truncated at u_max.  Splitting the
// truncated range and probing one block beyond exposes divergence.
struct LowerIntegral {
    double value;
    bool diverged;
};

LowerIntegral z_integral(const Modulus& w, double delta, double tol) {
    const double u_max = 280.0;  // t down to δ e^-280
    auto g = [&](double u) { return w(delta * std::exp(-u)); };
    double total = 0.0;
    // geometric blocks keep the adaptive quadrature well scaled
    double a = 0.0;
    for (double b = 4.0; a < u_max; b *= 2.0) {
        const double hi = std::min(b, u_max);
        total += integrate_adaptive(g, a, hi, tol);
        a = hi;
    }
    const double probe = integrate_adaptive(g, u_max, 2.0 * u_max, tol);
    const bool diverged = probe > 1e-6 * std::max(total, 1e-300) + 1e-40;
    return {total + probe, diverged};
}

double zn_integral(const Modulus& w, double delta, int n, double tol) {
    // ∫_δ^1 ω/t^{n+1} dt = ∫_0^{ln(1/δ)} ω(δ e^v) (δ e^v)^{-n} dv
    const double vmax = std::log(1.0 / delta);
    auto g = [&](double v) {
        const double t = delta * std::exp(v);
        return w(t) * std::pow(t, -static_cast<double>(n));
    };
    return integrate_adaptive(g, 0.0, vmax, tol * std::pow(delta, -static_cast<double>(n)));
}

// A ratio sequence over decreasing δ counts as bounded when its increments
// die out toward the small-δ end: a converging sequence has shrinking
// increments, while logarithmic growth keeps adding a fixed amount per
// decade.  Decreasing stretches never count against boundedness.
bool bounded_trend(const std::vector<double>& ratio) {
    const std::size_t n = ratio.size();
    if (n < 3) return true;
    double scale = 0.0;
    for (double r : ratio) scale = std::max(scale, std::abs(r));
    double g_max = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        g_max = std::max(g_max, ratio[i + 1] - ratio[i]);
    if (g_max <= 1e-3 * scale + 1e-12) return true;  // flat
    const double g_last = std::max(ratio[n - 1] - ratio[n - 2],
                                   ratio[n - 2] - ratio[n - 3]);
    return g_last <= 0.4 * g_max;
}

}  // namespace

ZbsReport zbs_check(const Modulus& w, int n, std::vector<double> deltas,
                    double quad_tol) {
    if (n < 1) throw std::invalid_argument("zbs_check: n must be >= 1");
    if (deltas.size() < 2)
        throw std::invalid_argument("zbs_check: need at least 2 grid points");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (!(deltas[i] > 0.0 && deltas[i] < 1.0))
            throw std::invalid_argument("zbs_check: deltas must lie in (0,1)");
        if (i > 0 && deltas[i] >= deltas[i - 1])
            throw std::invalid_argument("zbs_check: deltas must decrease");
    }

    ZbsReport rep;
    rep.n = n;
    rep.deltas = std::move(deltas);
    rep.conditions = check_conditions(w);
    if (!rep.conditions.all()) return rep;  // screening failure reported as such

    bool diverged = false;
    for (double d : rep.deltas) {
        const double wd = w(d);
        const LowerIntegral zi = z_integral(w, d, quad_tol);
        diverged = diverged || zi.diverged;
        rep.z_ratio.push_back(zi.value / wd);
        rep.zn_ratio.push_back(zn_integral(w, d, n, quad_tol) / (wd / std::pow(d, n)));
    }
    rep.z_diverged = diverged;
    rep.z_bounded = !diverged && bounded_trend(rep.z_ratio);
    rep.zn_bounded = bounded_trend(rep.zn_ratio);
    rep.z_sup = *std::max_element(rep.z_ratio.begin(), rep.z_ratio.end());
    rep.zn_sup = *std::max_element(rep.zn_ratio.begin(), rep.zn_ratio.end());
    return rep;
}

}  // namespace tap
