#include "germain/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "germain/modarith.hpp"

namespace germain {

namespace {

uint64_t isqrt(uint64_t n) {
  uint64_t r = uint64_t(std::sqrt(double(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Odd base primes up to limit (inclusive), simple sieve. limit <= 2^20 + 1
// for any range under the sieve cap.
std::vector<uint32_t> odd_base_primes(uint32_t limit) {
  std::vector<uint32_t> out;
  if (limit < 3) return out;
  std::vector<bool> composite(limit + 1, false);
  for (uint32_t i = 3; uint64_t(i) * i <= limit; i += 2)
    if (!composite[i])
      for (uint64_t j = uint64_t(i) * i; j <= limit; j += 2 * i) composite[j] = true;
  for (uint32_t i = 3; i <= limit; i += 2)
    if (!composite[i]) out.push_back(i);
  return out;
}

void validate_range(const PrimeRange& range) {
  if (range.lo < 2) throw usage_error("PrimeRange: lo must be >= 2");
  if (range.hi <= range.lo) throw usage_error("PrimeRange: hi must be > lo");
  if (range.segment_bytes == 0) throw usage_error("PrimeRange: segment_bytes must be positive");
}

constexpr uint64_t kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                     43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

constexpr uint64_t kMillerRabinWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(uint64_t n) {
  if (n >= kMaxModulus) throw capacity_error("is_prime: n must be < 2^62");
  if (n < 2) return false;
  for (uint64_t p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // n is odd, > 97, with no factor below 100. Deterministic Miller-Rabin:
  // the witness set {2..37} decides primality for all n < 3.3e24.
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : kMillerRabinWitnesses) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void primes_in_range(const PrimeRange& range, const std::function<void(uint64_t)>& emit) {
  validate_range(range);
  if (range.hi > kSieveCap)
    throw capacity_error(
        "primes_in_range: hi exceeds the 2^40 sieve capacity; "
        "use for_each_prime (per-candidate testing) instead");

  const uint64_t lo = range.lo, hi = range.hi;
  if (lo <= 2) emit(2);
  if (hi <= 3) return;

  const auto base = odd_base_primes(uint32_t(isqrt(hi - 1)));

  // One bit per odd number; a window spans 16*segment_bytes integers.
  const uint64_t span = uint64_t(range.segment_bytes) * 16;
  std::vector<uint8_t> bits(range.segment_bytes);
  const uint64_t first = std::max<uint64_t>(lo, 3) | 1;

  for (uint64_t w0 = first; w0 < hi; w0 += span) {
    const uint64_t w1 = std::min(hi, w0 + span);
    std::memset(bits.data(), 0, bits.size());
    for (uint32_t p : base) {
      const uint64_t p2 = uint64_t(p) * p;
      if (p2 >= w1) break;
      uint64_t start = std::max(p2, (w0 + p - 1) / p * p);
      if ((start & 1) == 0) start += p;
      for (uint64_t v = start; v < w1; v += 2 * p) {
        const uint64_t i = (v - w0) >> 1;
        bits[i >> 3] |= uint8_t(1u << (i & 7));
      }
    }
    for (uint64_t v = w0; v < w1; v += 2) {
      const uint64_t i = (v - w0) >> 1;
      if (!(bits[i >> 3] & (1u << (i & 7)))) emit(v);
    }
  }
}

std::vector<uint64_t> primes_up_to(uint64_t hi) {
  std::vector<uint64_t> out;
  if (hi <= 2) return out;
  primes_in_range({2, hi}, [&](uint64_t p) { out.push_back(p); });
  return out;
}

void for_each_prime(uint64_t lo, uint64_t hi, std::size_t segment_bytes,
                    const std::function<void(uint64_t)>& emit) {
  if (lo < 2) throw usage_error("for_each_prime: lo must be >= 2");
  if (hi <= lo) throw usage_error("for_each_prime: hi must be > lo");
  if (hi > kMaxModulus) throw capacity_error("for_each_prime: hi must be <= 2^62");

  if (lo < kSieveCap)
    primes_in_range({lo, std::min(hi, kSieveCap), segment_bytes}, emit);
  if (hi <= kSieveCap) return;

  for (uint64_t n = std::max(lo, kSieveCap) | 1; n < hi; n += 2)
    if (is_prime(n)) emit(n);
}

void sophie_germain_pairs(const PrimeRange& range, std::optional<unsigned> class_filter,
                          const std::function<void(const SophieGermainPair&)>& emit) {
  validate_range(range);
  if (class_filter && *class_filter != 1 && *class_filter != 3)
    throw usage_error("sophie_germain_pairs: class filter must be 1 or 3");
  if (range.hi > (kMaxModulus - 1) / 2)
    throw capacity_error("sophie_germain_pairs: 2p+1 must stay below 2^62");

  const uint64_t lo = std::max<uint64_t>(range.lo, 3);
  if (lo >= range.hi) return;
  for_each_prime(lo, range.hi, range.segment_bytes, [&](uint64_t p) {
    const unsigned cls = unsigned(p & 3);
    if (class_filter && *class_filter != cls) return;
    const uint64_t q = 2 * p + 1;
    if (is_prime(q)) emit({p, q, cls});
  });
}

}  // namespace germain
