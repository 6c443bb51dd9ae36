#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace dirichlet {

/// All primes <= n, ascending. Segmented odd-only sieve of Eratosthenes.
std::vector<std::uint32_t> sieve(std::uint64_t n);

/// Process-wide prime table covering at least [2, n]. Each returned table is
/// immutable; requesting a larger bound builds a new one and leaves earlier
/// tables valid for their holders.
std::shared_ptr<const std::vector<std::uint32_t>> shared_primes(std::uint64_t n);

/// The primes <= n from a sorted table.
std::span<const std::uint32_t> primes_up_to(const std::vector<std::uint32_t>& table, std::uint64_t n);

}  // namespace dirichlet
