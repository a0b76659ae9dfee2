#include "tap/box.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tap {

long ell1_degree(std::span<const int> k) {
    long nu = 0;
    for (int c : k) nu += std::abs(static_cast<long>(c));
    return nu;
}

bool in_y(std::span<const int> k) {
    bool all_nonneg = true, all_neg = true;
    for (int c : k) {
        if (c < 0) all_nonneg = false;
        if (c >= 0) all_neg = false;
    }
    return all_nonneg || all_neg;
}

BoxLayout::BoxLayout(int d_, int K_) : d(d_), K(K_) {
    if (d < 1) throw std::invalid_argument("BoxLayout: dimension d must be >= 1");
    if (K < 1) throw std::invalid_argument("BoxLayout: degree K must be >= 1");
    // guard against overflow of side^d
    double sz = 1.0;
    for (int i = 0; i < d; ++i) sz *= side();
    if (sz > 2.5e8)
        throw std::invalid_argument("BoxLayout: coefficient box too large");
}

std::size_t BoxLayout::size() const {
    std::size_t n = 1;
    for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(side());
    return n;
}

std::size_t BoxLayout::flat(std::span<const int> k) const {
    if (static_cast<int>(k.size()) != d)
        throw std::invalid_argument("BoxLayout::flat: wrong index length");
    std::size_t idx = 0;
    for (int j = 0; j < d; ++j) {
        if (k[j] < -K || k[j] > K)
            throw std::out_of_range("BoxLayout::flat: index outside the box");
        idx = idx * static_cast<std::size_t>(side()) +
              static_cast<std::size_t>(k[j] + K);
    }
    return idx;
}

void BoxLayout::unflat(std::size_t idx, std::span<int> k) const {
    for (int j = d - 1; j >= 0; --j) {
        k[j] = static_cast<int>(idx % static_cast<std::size_t>(side())) - K;
        idx /= static_cast<std::size_t>(side());
    }
}

namespace {
std::map<std::pair<int, int>, std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>
    g_block_cache;
std::mutex g_block_mutex;

const std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>&
cached_blocks(const BoxLayout& box) {
    std::lock_guard<std::mutex> lock(g_block_mutex);
    auto key = std::make_pair(box.d, box.K);
    auto it = g_block_cache.find(key);
    if (it == g_block_cache.end()) {
        std::vector<std::uint64_t> all(box.nu_max() + 1, 0);
        std::vector<std::uint64_t> ys(box.nu_max() + 1, 0);
        for_each_index(box, [&](std::size_t, std::span<const int> k, long nu) {
            ++all[static_cast<std::size_t>(nu)];
            if (in_y(k)) ++ys[static_cast<std::size_t>(nu)];
        });
        it = g_block_cache.emplace(key, std::make_pair(std::move(all), std::move(ys))).first;
    }
    return it->second;
}
}  // namespace

std::vector<std::uint64_t> block_sizes(const BoxLayout& box) {
    return cached_blocks(box).first;
}

std::vector<std::uint64_t> block_sizes_y(const BoxLayout& box) {
    return cached_blocks(box).second;
}

}  // namespace tap
