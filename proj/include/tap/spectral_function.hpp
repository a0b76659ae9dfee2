#pragma once

#include <complex>
#include <span>
#include <vector>

#include "tap/box.hpp"

namespace tap {

using Complex = std::complex<double>;

/// Trigonometric polynomial on T^d held as the dense tensor of Fourier
/// coefficients over the box |k_j| <= K.  Coefficients outside the box are
/// identically zero.  Values are immutable by convention once built; all
/// operators return new instances.
class SpectralFunction {
public:
    SpectralFunction(int d, int K, bool real_valued = false);

    int dim() const { return box_.d; }
    int degree() const { return box_.K; }
    const BoxLayout& box() const { return box_; }
    std::size_t size() const { return coeffs_.size(); }

    /// Declares Hermitian symmetry coeff(-k) == conj(coeff(k)).
    bool real_valued() const { return real_; }
    void set_real_valued(bool v) { real_ = v; }

    Complex coeff(std::span<const int> k) const;  // 0 outside the box
    void set_coeff(std::span<const int> k, Complex v);

    std::vector<Complex>& coeffs() { return coeffs_; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Largest ℓ1 degree carrying a nonzero coefficient; 0 for the zero
    /// function.
    int max_degree() const;

    /// Block energies Σ_{|k|_1 = ν} |f̂_k|², ν = 0 .. d·K.
    std::vector<double> block_energies() const;

    /// Exact L_2 norm by Parseval.
    double l2_norm() const;

    bool is_hermitian(double tol = 1e-12) const;

    SpectralFunction& operator+=(const SpectralFunction& o);
    SpectralFunction& operator-=(const SpectralFunction& o);
    SpectralFunction& operator*=(Complex c);

private:
    BoxLayout box_;
    std::vector<Complex> coeffs_;
    bool real_;
};

SpectralFunction operator+(SpectralFunction a, const SpectralFunction& b);
SpectralFunction operator-(SpectralFunction a, const SpectralFunction& b);
SpectralFunction operator*(Complex c, SpectralFunction f);

/// e_k scaled by `amplitude` on the box (d, K).
SpectralFunction unit_mode(int d, int K, std::span<const int> k,
                           Complex amplitude = 1.0);

/// Keeps coefficients with |k|_1 <= cutoff, zeroes the rest.
SpectralFunction partial_sum(const SpectralFunction& f, int cutoff);

/// Zeroes every coefficient with index outside Y = Z^d_+ ∪ Z^d_-.
SpectralFunction project_y(const SpectralFunction& f);

double l2_distance(const SpectralFunction& a, const SpectralFunction& b);

/// max_k |a_k - b_k|
double max_abs_coeff_diff(const SpectralFunction& a, const SpectralFunction& b);

/// max_k |a_k - b_k| / max(1, |a_k|, |b_k|): absolute for O(1) coefficients,
/// relative for large ones.
double max_rel_coeff_diff(const SpectralFunction& a, const SpectralFunction& b);

}  // namespace tap
