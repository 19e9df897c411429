#include "logint/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace logint::primes {

namespace {

constexpr std::uint64_t kCacheMagic = 0x4950544E49474F4CULL;  // "LOGINTPI"

void check_limit(std::uint64_t x) {
  if (x > kMaxLimit) throw std::domain_error("primes: limit exceeds the 10^8 cap");
}

// Odd-only sieve of [3, limit]; returns the odd primes.
std::vector<std::uint32_t> base_primes(std::uint32_t limit) {
  std::vector<bool> composite((limit + 1) / 2, false);  // index i -> 2i+1
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 3; p <= limit; p += 2) {
    if (composite[p / 2]) continue;
    out.push_back(p);
    for (std::uint64_t m = std::uint64_t{p} * p; m <= limit; m += 2 * p) composite[m / 2] = true;
  }
  return out;
}

}  // namespace

void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn,
                    std::uint64_t segment_size) {
  check_limit(limit);
  if (segment_size < 64) throw std::domain_error("primes: segment size too small");
  if (limit < 2) return;
  fn(2);

  const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit)));
  std::vector<std::uint32_t> base = base_primes(root);

  // Bitmap over odd numbers of one segment: bit j of segment [lo, hi)
  // stands for lo + 2j.
  std::vector<std::uint64_t> bits;
  for (std::uint64_t lo = 3; lo <= limit; lo += segment_size) {
    std::uint64_t hi = std::min(lo + segment_size, limit + 1);  // half-open
    std::uint64_t n_odd = (hi - lo + 1) / 2;
    bits.assign((n_odd + 63) / 64, 0);
    for (std::uint32_t p : base) {
      std::uint64_t start = std::max<std::uint64_t>(std::uint64_t{p} * p, ((lo + p - 1) / p) * p);
      if (start % 2 == 0) start += p;
      if (start >= hi) continue;
      for (std::uint64_t m = start; m < hi; m += 2 * p) {
        std::uint64_t j = (m - lo) / 2;
        bits[j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
    for (std::uint64_t j = 0; j < n_odd; ++j)
      if (!(bits[j / 64] >> (j % 64) & 1)) fn(lo + 2 * j);
  }
}

std::uint64_t prime_pi(std::uint64_t x, CountingConvention conv, std::uint64_t segment_size) {
  if (x < 2) throw std::domain_error("prime_pi: x must be >= 2");
  check_limit(x);
  std::uint64_t count = 0;
  for_each_prime(x, [&](std::uint64_t) { ++count; }, segment_size);
  return conv == CountingConvention::Bessel1810 ? count + 1 : count;
}

std::vector<std::uint64_t> prime_pi_many(const std::vector<std::uint64_t>& xs,
                                         CountingConvention conv, std::uint64_t segment_size) {
  if (xs.empty()) return {};
  std::uint64_t max_x = *std::max_element(xs.begin(), xs.end());
  check_limit(max_x);
  for (std::uint64_t x : xs)
    if (x < 2) throw std::domain_error("prime_pi_many: every x must be >= 2");

  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });

  std::vector<std::uint64_t> out(xs.size(), 0);
  std::size_t next = 0;
  std::uint64_t count = 0;
  for_each_prime(max_x, [&](std::uint64_t p) {
    while (next < order.size() && xs[order[next]] < p) out[order[next++]] = count;
    ++count;
  }, segment_size);
  while (next < order.size()) out[order[next++]] = count;

  if (conv == CountingConvention::Bessel1810)
    for (auto& c : out) ++c;
  return out;
}

std::uint64_t PrimeCounts::checkpoint(std::uint64_t x, CountingConvention conv) const {
  if (block_size == 0 || x % block_size != 0 || x > limit)
    throw std::domain_error("PrimeCounts: checkpoint must be a block boundary within the limit");
  std::uint64_t sum = 0;
  for (std::uint64_t k = 0; k < x / block_size; ++k) sum += block_counts[k];
  return conv == CountingConvention::Bessel1810 ? sum + 1 : sum;
}

std::uint64_t PrimeCounts::total(CountingConvention conv) const { return checkpoint(limit, conv); }

PrimeCounts block_counts(std::uint64_t limit, std::uint64_t block_size,
                         std::uint64_t segment_size) {
  if (block_size != 1000 && block_size != 10000)
    throw std::domain_error("block_counts: block size must be a chiliad (10^3) or myriad (10^4)");
  if (limit == 0 || limit % block_size != 0)
    throw std::domain_error("block_counts: limit must be a positive multiple of the block size");
  check_limit(limit);

  PrimeCounts pc{limit, block_size, std::vector<std::uint64_t>(limit / block_size, 0)};
  for_each_prime(limit, [&](std::uint64_t p) { ++pc.block_counts[p / block_size]; }, segment_size);
  return pc;
}

std::vector<std::int8_t> mobius_upto(std::uint32_t n) {
  if (n < 1 || n > 1'000'000) throw std::domain_error("mobius_upto: n must lie in [1, 10^6]");
  std::vector<std::uint32_t> lpf(n + 1, 0), primes;
  std::vector<std::int8_t> mu(n + 1, 0);
  mu[1] = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (lpf[i] == 0) {
      lpf[i] = i;
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::uint32_t p : primes) {
      if (p > lpf[i] || std::uint64_t{p} * i > n) break;
      lpf[p * i] = p;
      mu[p * i] = (p == lpf[i]) ? 0 : static_cast<std::int8_t>(-mu[i]);
    }
  }
  return mu;
}

std::pair<Real, Real> euler_product_partial(const Real& s, std::uint64_t N) {
  if (s <= 1) throw std::domain_error("euler_product_partial: s must exceed 1");
  if (N < 2) throw std::domain_error("euler_product_partial: N must be >= 2");
  long d = s.digits();
  Real neg_s = -s;
  Real sum(1, d);  // n = 1 term
  for (std::uint64_t n = 2; n <= N; ++n) sum += pow(Real(static_cast<long>(n), d), neg_s);
  Real one(1, d);
  Real prod(1, d);
  for_each_prime(N, [&](std::uint64_t p) {
    prod *= one / (one - pow(Real(static_cast<long>(p), d), neg_s));
  });
  return {sum, prod};
}

void save_counts(const PrimeCounts& counts, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("save_counts: cannot open " + path.string());
  auto put = [&](std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
  };
  put(kCacheMagic);
  put(counts.limit);
  put(counts.block_size);
  for (std::uint64_t c : counts.block_counts) put(c);
  if (!out) throw std::runtime_error("save_counts: write failed for " + path.string());
}

PrimeCounts load_counts(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_counts: cannot open " + path.string());
  auto get = [&](std::uint64_t& v) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{b[i]} << (8 * i);
  };
  std::uint64_t magic = 0;
  PrimeCounts pc;
  get(magic);
  get(pc.limit);
  get(pc.block_size);
  if (!in || magic != kCacheMagic) throw std::runtime_error("load_counts: not a sieve checkpoint file");
  if (pc.block_size == 0 || pc.limit % pc.block_size != 0 || pc.limit > kMaxLimit)
    throw std::runtime_error("load_counts: corrupt checkpoint header");
  pc.block_counts.resize(pc.limit / pc.block_size);
  for (auto& c : pc.block_counts) get(c);
  if (!in) throw std::runtime_error("load_counts: truncated checkpoint file");
  return pc;
}

}  // namespace logint::primes
