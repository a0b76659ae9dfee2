#include "tap/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace tap {

namespace {

GaussLegendreRule build_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    // Newton iteration from the Chebyshev-like initial guess; symmetric pairs.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // recurrence for P_n(x) and P_{n-1}(x)
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - static_cast<double>(j) * p2) /
                     (static_cast<double>(j) + 1.0);
            }
            pp = static_cast<double>(n) * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

std::map<int, GaussLegendreRule> g_rules;
std::mutex g_rules_mutex;

double panel(const std::function<double(double)>& f, double a, double b,
             const GaussLegendreRule& rule) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return s * half;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, int depth,
             const GaussLegendreRule& rule) {
    const double mid = 0.5 * (a + b);
    const double left = panel(f, a, mid, rule);
    const double right = panel(f, mid, b, rule);
    const double err = std::abs(left + right - whole);
    if (err < tol || depth <= 0) return left + right;
    return adapt(f, a, mid, left, 0.5 * tol, depth - 1, rule) +
           adapt(f, mid, b, right, 0.5 * tol, depth - 1, rule);
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    std::lock_guard<std::mutex> lock(g_rules_mutex);
    auto it = g_rules.find(n);
    if (it == g_rules.end()) it = g_rules.emplace(n, build_rule(n)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n) {
    return panel(f, a, b, gauss_legendre(n));
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth) {
    if (!(b >= a)) throw std::invalid_argument("integrate_adaptive: b < a");
    if (a == b) return 0.0;
    const GaussLegendreRule& rule = gauss_legendre(15);
    const double whole = panel(f, a, b, rule);
    return adapt(f, a, b, whole, tol, max_depth, rule);
}

}  // namespace tap
