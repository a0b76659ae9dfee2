#include "tap/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tap {

namespace {

using CVec = std::vector<std::complex<double>>;

// Phase row exp(sign * i * 2π t (i-K) / m), i = 0..2K, built incrementally
// with periodic exact re-anchoring to keep the drift at machine level.
void fill_phase_row(CVec& row, int t, int m, int K, int sign) {
    const double base = 2.0 * std::numbers::pi * static_cast<double>(t) /
                        static_cast<double>(m);
    const std::complex<double> step = std::polar(1.0, sign * base);
    const int side = 2 * K + 1;
    std::complex<double> cur;
    for (int i = 0; i < side; ++i) {
        if (i % 256 == 0)
            cur = std::polar(1.0, sign * base * static_cast<double>(i - K));
        row[static_cast<std::size_t>(i)] = cur;
        cur *= step;
    }
}

// Replaces one tensor axis of length `len` by `rows` outputs:
//   out[..., t, ...] = scale * Σ_i row_t[i] * in[..., i, ...]
// Rows are regenerated per t; shape is updated in place.
CVec axis_contract(const CVec& in, std::vector<std::size_t>& shape, int axis,
                   int rows, int m, int K, int sign, double scale) {
    const std::size_t len = shape[static_cast<std::size_t>(axis)];
    std::size_t pre = 1, post = 1;
    for (int a = 0; a < axis; ++a) pre *= shape[static_cast<std::size_t>(a)];
    for (std::size_t a = static_cast<std::size_t>(axis) + 1; a < shape.size(); ++a)
        post *= shape[a];

    CVec out(pre * static_cast<std::size_t>(rows) * post);
    CVec row(len);
    for (int t = 0; t < rows; ++t) {
        fill_phase_row(row, t, m, K, sign);
        if (scale != 1.0)
            for (auto& v : row) v *= scale;
        for (std::size_t p = 0; p < pre; ++p) {
            std::complex<double>* o =
                &out[(p * static_cast<std::size_t>(rows) +
                      static_cast<std::size_t>(t)) * post];
            for (std::size_t q = 0; q < post; ++q) o[q] = {0.0, 0.0};
            for (std::size_t i = 0; i < len; ++i) {
                const std::complex<double> w = row[i];
                const std::complex<double>* x = &in[(p * len + i) * post];
                for (std::size_t q = 0; q < post; ++q) o[q] += w * x[q];
            }
        }
    }
    shape[static_cast<std::size_t>(axis)] = static_cast<std::size_t>(rows);
    return out;
}

}  // namespace

SampleField synthesize(const SpectralFunction& f, int m) {
    const int K = f.degree(), d = f.dim();
    if (m < 2 * K + 1)
        throw std::invalid_argument(
            "synthesize: grid must satisfy m >= 2K+1 (aliasing)");
    std::vector<std::size_t> shape(static_cast<std::size_t>(d),
                                   static_cast<std::size_t>(2 * K + 1));
    CVec work = f.coeffs();
    for (int axis = 0; axis < d; ++axis)
        work = axis_contract(work, shape, axis, m, m, K, +1, 1.0);
    SampleField out(d, m);
    out.values = std::move(work);
    return out;
}

SpectralFunction analyze(const SampleField& s, int K, bool real_valued) {
    if (K < 1) throw std::invalid_argument("analyze: K must be >= 1");
    if (s.m < 2 * K + 1)
        throw std::invalid_argument(
            "analyze: grid must satisfy m >= 2K+1 (aliasing)");
    std::vector<std::size_t> shape(static_cast<std::size_t>(s.d),
                                   static_cast<std::size_t>(s.m));
    CVec work = s.values;
    const double scale = 1.0 / static_cast<double>(s.m);
    for (int axis = 0; axis < s.d; ++axis) {
        // transposed kernel: coefficient index is the row, grid index the column
        const std::size_t len = shape[static_cast<std::size_t>(axis)];
        std::size_t pre = 1, post = 1;
        for (int a = 0; a < axis; ++a) pre *= shape[static_cast<std::size_t>(a)];
        for (std::size_t a = static_cast<std::size_t>(axis) + 1; a < shape.size(); ++a)
            post *= shape[a];
        const int side = 2 * K + 1;
        CVec out(pre * static_cast<std::size_t>(side) * post);
        CVec row(len);
        for (int i = 0; i < side; ++i) {
            // row over grid points t for fixed coefficient k = i-K
            const double base = -2.0 * std::numbers::pi *
                                static_cast<double>(i - K) /
                                static_cast<double>(s.m);
            const std::complex<double> step = std::polar(1.0, base);
            std::complex<double> cur(1.0, 0.0);
            for (std::size_t t = 0; t < len; ++t) {
                if (t % 256 == 0)
                    cur = std::polar(1.0, base * static_cast<double>(t));
                row[t] = cur * scale;
                cur *= step;
            }
            for (std::size_t p = 0; p < pre; ++p) {
                std::complex<double>* o =
                    &out[(p * static_cast<std::size_t>(side) +
                          static_cast<std::size_t>(i)) * post];
                for (std::size_t q = 0; q < post; ++q) o[q] = {0.0, 0.0};
                for (std::size_t t = 0; t < len; ++t) {
                    const std::complex<double> w = row[t];
                    const std::complex<double>* x = &work[(p * len + t) * post];
                    for (std::size_t q = 0; q < post; ++q) o[q] += w * x[q];
                }
            }
        }
        work = std::move(out);
        shape[static_cast<std::size_t>(axis)] = static_cast<std::size_t>(side);
    }
    SpectralFunction f(s.d, K, real_valued);
    f.coeffs() = std::move(work);
    return f;
}

}  // namespace tap
