#ifndef LOGINT_PRIMES_HPP
#define LOGINT_PRIMES_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <utility>
#include <vector>

#include "logint/real.hpp"

namespace logint::primes {

inline constexpr std::uint64_t kMaxLimit = 100'000'000;
inline constexpr std::uint64_t kDefaultSegment = std::uint64_t{1} << 18;

// Modern counts primes only; Bessel1810 additionally counts 1, as the 1810
// table does, so Bessel1810(x) = Modern(x) + 1 for x >= 2.
enum class CountingConvention { Modern, Bessel1810 };

// Exact prime count pi(x), 2 <= x <= 1e8, by a segmented odd-only sieve.
std::uint64_t prime_pi(std::uint64_t x, CountingConvention conv = CountingConvention::Modern,
                       std::uint64_t segment_size = kDefaultSegment);

// pi at each of several points with a single sieve pass; xs need not be
// sorted, results align with the input order.
std::vector<std::uint64_t> prime_pi_many(const std::vector<std::uint64_t>& xs,
                                         CountingConvention conv = CountingConvention::Modern,
                                         std::uint64_t segment_size = kDefaultSegment);

// Per-block prime tallies: block k counts primes in [k*block_size,
// (k+1)*block_size). block_size is a chiliad (10^3) or myriad (10^4) and
// limit must be a multiple of it.
struct PrimeCounts {
  std::uint64_t limit = 0;
  std::uint64_t block_size = 0;
  std::vector<std::uint64_t> block_counts;

  // Cumulative pi at a block boundary x (x % block_size == 0).
  std::uint64_t checkpoint(std::uint64_t x,
                           CountingConvention conv = CountingConvention::Modern) const;
  std::uint64_t total(CountingConvention conv = CountingConvention::Modern) const;
};
PrimeCounts block_counts(std::uint64_t limit, std::uint64_t block_size,
                         std::uint64_t segment_size = kDefaultSegment);

// Streams primes <= limit in ascending order.
void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn,
                    std::uint64_t segment_size = kDefaultSegment);

// Mobius mu(k) for 1 <= k <= n (index 0 unused), by a linear sieve. n <= 1e6.
std::vector<std::int8_t> mobius_upto(std::uint32_t n);

// Partial sum sum_{n<=N} n^-s and partial product prod_{p<=N} 1/(1-p^-s)
// of the Euler identity, s > 1.
std::pair<Real, Real> euler_product_partial(const Real& s, std::uint64_t N);

// Checkpoint file (little-endian 64-bit words: magic, limit, block_size,
// then the counts array) so repeated table runs skip re-sieving.
void save_counts(const PrimeCounts& counts, const std::filesystem::path& path);
PrimeCounts load_counts(const std::filesystem::path& path);

}  // namespace logint::primes

#endif  // LOGINT_PRIMES_HPP
