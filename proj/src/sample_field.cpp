#include "tap/sample_field.hpp"

#include <cmath>
#include <stdexcept>

namespace tap {

SampleField::SampleField(int d_, int m_) : d(d_), m(m_) {
    if (d < 1) throw std::invalid_argument("SampleField: dimension d must be >= 1");
    if (m < 1) throw std::invalid_argument("SampleField: grid size m must be >= 1");
    std::size_t n = 1;
    for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(m);
    values.assign(n, std::complex<double>(0.0, 0.0));
}

double lp_norm(const SampleField& s, LpExponent p) {
    if (p.is_infinity()) {
        double mx = 0.0;
        for (const auto& v : s.values) mx = std::max(mx, std::abs(v));
        return mx;
    }
    const double pe = p.value();
    double acc = 0.0;
    if (pe == 2.0) {
        for (const auto& v : s.values) acc += std::norm(v);
    } else if (pe == 1.0) {
        for (const auto& v : s.values) acc += std::abs(v);
    } else {
        for (const auto& v : s.values) acc += std::pow(std::abs(v), pe);
    }
    acc /= static_cast<double>(s.values.size());
    return pe == 2.0 ? std::sqrt(acc) : std::pow(acc, 1.0 / pe);
}

double max_abs_imag(const SampleField& s) {
    double mx = 0.0;
    for (const auto& v : s.values) mx = std::max(mx, std::abs(v.imag()));
    return mx;
}

double linf_distance(const SampleField& a, const SampleField& b) {
    if (a.d != b.d || a.m != b.m)
        throw std::invalid_argument("linf_distance: mismatched grids");
    double mx = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        mx = std::max(mx, std::abs(a.values[i] - b.values[i]));
    return mx;
}

}  // namespace tap
