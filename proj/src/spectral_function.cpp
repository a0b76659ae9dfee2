#include "tap/spectral_function.hpp"

#include <cmath>
#include <stdexcept>

namespace tap {

SpectralFunction::SpectralFunction(int d, int K, bool real_valued)
    : box_(d, K), coeffs_(box_.size(), Complex(0.0, 0.0)), real_(real_valued) {}

Complex SpectralFunction::coeff(std::span<const int> k) const {
    if (static_cast<int>(k.size()) != box_.d)
        throw std::invalid_argument("SpectralFunction::coeff: wrong index length");
    for (int j = 0; j < box_.d; ++j)
        if (k[j] < -box_.K || k[j] > box_.K) return Complex(0.0, 0.0);
    return coeffs_[box_.flat(k)];
}

void SpectralFunction::set_coeff(std::span<const int> k, Complex v) {
    coeffs_[box_.flat(k)] = v;
}

int SpectralFunction::max_degree() const {
    long best = 0;
    for_each_index(box_, [&](std::size_t flat, std::span<const int>, long nu) {
        if (nu > best && coeffs_[flat] != Complex(0.0, 0.0)) best = nu;
    });
    return static_cast<int>(best);
}

std::vector<double> SpectralFunction::block_energies() const {
    std::vector<double> e(static_cast<std::size_t>(box_.nu_max()) + 1, 0.0);
    for_each_index(box_, [&](std::size_t flat, std::span<const int>, long nu) {
        e[static_cast<std::size_t>(nu)] += std::norm(coeffs_[flat]);
    });
    return e;
}

double SpectralFunction::l2_norm() const {
    double s = 0.0;
    for (const Complex& c : coeffs_) s += std::norm(c);
    return std::sqrt(s);
}

bool SpectralFunction::is_hermitian(double tol) const {
    bool ok = true;
    std::vector<int> neg(static_cast<std::size_t>(box_.d));
    for_each_index(box_, [&](std::size_t flat, std::span<const int> k, long) {
        if (!ok) return;
        for (int j = 0; j < box_.d; ++j) neg[static_cast<std::size_t>(j)] = -k[j];
        const Complex mirror = coeffs_[box_.flat(neg)];
        if (std::abs(mirror - std::conj(coeffs_[flat])) > tol) ok = false;
    });
    return ok;
}

namespace {
void require_same_box(const BoxLayout& a, const BoxLayout& b, const char* op) {
    if (!(a == b))
        throw std::invalid_argument(std::string(op) + ": mismatched boxes");
}
}  // namespace

SpectralFunction& SpectralFunction::operator+=(const SpectralFunction& o) {
    require_same_box(box_, o.box_, "SpectralFunction::operator+=");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    real_ = real_ && o.real_;
    return *this;
}

SpectralFunction& SpectralFunction::operator-=(const SpectralFunction& o) {
    require_same_box(box_, o.box_, "SpectralFunction::operator-=");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    real_ = real_ && o.real_;
    return *this;
}

SpectralFunction& SpectralFunction::operator*=(Complex c) {
    for (Complex& v : coeffs_) v *= c;
    if (c.imag() != 0.0) real_ = false;
    return *this;
}

SpectralFunction operator+(SpectralFunction a, const SpectralFunction& b) {
    a += b;
    return a;
}

SpectralFunction operator-(SpectralFunction a, const SpectralFunction& b) {
    a -= b;
    return a;
}

SpectralFunction operator*(Complex c, SpectralFunction f) {
    f *= c;
    return f;
}

SpectralFunction unit_mode(int d, int K, std::span<const int> k, Complex amplitude) {
    SpectralFunction f(d, K);
    f.set_coeff(k, amplitude);
    return f;
}

SpectralFunction partial_sum(const SpectralFunction& f, int cutoff) {
    if (cutoff < 0)
        throw std::invalid_argument("partial_sum: cutoff must be >= 0");
    SpectralFunction g = f;
    for_each_index(f.box(), [&](std::size_t flat, std::span<const int>, long nu) {
        if (nu > cutoff) g.coeffs()[flat] = Complex(0.0, 0.0);
    });
    return g;
}

SpectralFunction project_y(const SpectralFunction& f) {
    SpectralFunction g = f;
    for_each_index(f.box(), [&](std::size_t flat, std::span<const int> k, long) {
        if (!in_y(k)) g.coeffs()[flat] = Complex(0.0, 0.0);
    });
    return g;
}

double l2_distance(const SpectralFunction& a, const SpectralFunction& b) {
    require_same_box(a.box(), b.box(), "l2_distance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += std::norm(a.coeffs()[i] - b.coeffs()[i]);
    return std::sqrt(s);
}

double max_abs_coeff_diff(const SpectralFunction& a, const SpectralFunction& b) {
    require_same_box(a.box(), b.box(), "max_abs_coeff_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a.coeffs()[i] - b.coeffs()[i]));
    return m;
}

double max_rel_coeff_diff(const SpectralFunction& a, const SpectralFunction& b) {
    require_same_box(a.box(), b.box(), "max_rel_coeff_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double scale = std::max(
            1.0, std::max(std::abs(a.coeffs()[i]), std::abs(b.coeffs()[i])));
        m = std::max(m, std::abs(a.coeffs()[i] - b.coeffs()[i]) / scale);
    }
    return m;
}

}  // namespace tap
