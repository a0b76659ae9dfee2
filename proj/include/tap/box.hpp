#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace tap {

/// ℓ1 degree Σ_j |k_j| of a multi-index.
long ell1_degree(std::span<const int> k);

/// Membership in the cone Y = Z^d_+ ∪ Z^d_-: every component >= 0, or every
/// component < 0.  (0 counts as nonnegative, so k = 0 lies in Y.)
bool in_y(std::span<const int> k);

/// Dense coefficient box |k_j| <= K in d dimensions.  Row-major layout with
/// the last axis fastest; axis component i_j = k_j + K in [0, 2K].
struct BoxLayout {
    int d;
    int K;

    BoxLayout(int d_, int K_);

    int side() const { return 2 * K + 1; }
    std::size_t size() const;
    int nu_max() const { return d * K; }  // largest ℓ1 degree in the box

    bool operator==(const BoxLayout& o) const { return d == o.d && K == o.K; }

    std::size_t flat(std::span<const int> k) const;  // throws outside the box
    void unflat(std::size_t idx, std::span<int> k) const;
};

/// Visits every index of the box in flat order.  The callback receives the
/// flat index, the multi-index, and its ℓ1 degree; the multi-index span stays
/// owned by the iterator.  Runs in O(size) with O(1) work per step.
template <class Fn>
void for_each_index(const BoxLayout& box, Fn&& fn) {
    const int d = box.d, K = box.K;
    std::vector<int> k(static_cast<std::size_t>(d), -K);
    long nu = static_cast<long>(d) * K;
    const std::size_t n = box.size();
    const std::span<const int> kview(k);
    for (std::size_t flat = 0; flat < n; ++flat) {
        fn(flat, kview, nu);
        // odometer step on the last axis, carrying leftward
        for (int j = d - 1; j >= 0; --j) {
            if (k[j] < K) {
                nu += (k[j] >= 0) ? 1 : -1;
                ++k[j];
                break;
            }
            k[j] = -K;  // |±K| unchanged, so nu keeps its value on reset
        }
    }
}

/// Number of indices per ℓ1-degree block, ν = 0 .. d·K.  Cached per (d, K).
std::vector<std::uint64_t> block_sizes(const BoxLayout& box);

/// Number of Y-indices per block (used when spreading energy over Y only).
std::vector<std::uint64_t> block_sizes_y(const BoxLayout& box);

}  // namespace tap
