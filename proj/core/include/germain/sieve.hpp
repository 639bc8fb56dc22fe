#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "germain/errors.hpp"

namespace germain {

// Sieve-based enumeration is limited to hi <= 2^40; larger bounds go
// through per-candidate Miller-Rabin (see for_each_prime).
inline constexpr uint64_t kSieveCap = uint64_t(1) << 40;

struct PrimeRange {
  uint64_t lo = 2;
  uint64_t hi = 0;
  // Bytes of one odd-only sieve window; 256 KiB covers 4M*2 integers.
  std::size_t segment_bytes = 256 * 1024;
};

struct SophieGermainPair {
  uint64_t p;        // prime
  uint64_t q;        // 2p+1, prime
  unsigned p_mod_4;  // 1 or 3

  friend bool operator==(const SophieGermainPair&, const SophieGermainPair&) = default;
};

// Deterministic for all n < 2^62: trial division by primes below 100, then
// Miller-Rabin with the fixed witness set {2,...,37} (valid to ~3.3e24).
bool is_prime(uint64_t n);

// Primes in [range.lo, range.hi), ascending, segmented sieve of
// Eratosthenes with odd-only bit packing. Output does not depend on
// segment_bytes. Throws capacity_error when hi > 2^40.
void primes_in_range(const PrimeRange& range, const std::function<void(uint64_t)>& emit);

std::vector<uint64_t> primes_up_to(uint64_t hi);  // collects [2, hi)

// Sieves when [lo, hi) fits under kSieveCap and steps candidates through
// is_prime above it; the crossover is the documented capacity bound of the
// sieve, not a correctness boundary.
void for_each_prime(uint64_t lo, uint64_t hi, std::size_t segment_bytes,
                    const std::function<void(uint64_t)>& emit);

// Sophie Germain pairs with p in [range.lo, range.hi), ascending, optionally
// restricted to one residue class of p mod 4. p = 2 is never emitted: the
// pair type classifies odd p only.
void sophie_germain_pairs(const PrimeRange& range, std::optional<unsigned> class_filter,
                          const std::function<void(const SophieGermainPair&)>& emit);

}  // namespace germain
