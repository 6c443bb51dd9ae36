#include "dirichlet/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace dirichlet {

namespace {

constexpr std::uint64_t kSegmentBytes = 1 << 17;

std::vector<std::uint32_t> small_primes(std::uint64_t n) {
    std::vector<char> composite(n + 1, 0);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
    }
    return out;
}

}  // namespace

std::vector<std::uint32_t> sieve(std::uint64_t n) {
    std::vector<std::uint32_t> primes;
    if (n < 2) return primes;
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))) + 1;
    const auto base = small_primes(root);

    primes.reserve(static_cast<std::size_t>(1.3 * static_cast<double>(n) / std::log(static_cast<double>(n) + 2)) + 8);
    primes.push_back(2);

    // Segment byte i stands for the odd number low + 2i.
    std::vector<char> seg(kSegmentBytes);
    std::vector<std::uint64_t> next(base.size(), 0);
    for (std::size_t i = 1; i < base.size(); ++i) next[i] = std::uint64_t{base[i]} * base[i];

    for (std::uint64_t low = 3; low <= n; low += 2 * kSegmentBytes) {
        const std::uint64_t high = std::min(n, low + 2 * kSegmentBytes - 1);
        const std::uint64_t len = (high - low) / 2 + 1;
        std::fill(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(len), 0);
        for (std::size_t i = 1; i < base.size(); ++i) {
            const std::uint64_t p = base[i];
            std::uint64_t j = next[i];
            if (j > high) continue;
            for (; j <= high; j += 2 * p) seg[(j - low) / 2] = 1;
            next[i] = j;
        }
        for (std::uint64_t i = 0; i < len; ++i) {
            if (!seg[i]) primes.push_back(static_cast<std::uint32_t>(low + 2 * i));
        }
    }
    return primes;
}

std::shared_ptr<const std::vector<std::uint32_t>> shared_primes(std::uint64_t n) {
    static std::mutex mutex;
    static std::shared_ptr<const std::vector<std::uint32_t>> table;
    static std::uint64_t covered = 0;

    std::lock_guard lock(mutex);
    if (!table || covered < n) {
        const std::uint64_t bound = std::max<std::uint64_t>(n, 2 * covered);
        table = std::make_shared<const std::vector<std::uint32_t>>(sieve(bound));
        covered = bound;
    }
    return table;
}

std::span<const std::uint32_t> primes_up_to(const std::vector<std::uint32_t>& table, std::uint64_t n) {
    const auto end = std::upper_bound(table.begin(), table.end(), n,
                                      [](std::uint64_t v, std::uint32_t p) { return v < p; });
    return {table.data(), static_cast<std::size_t>(end - table.begin())};
}

}  // namespace dirichlet
