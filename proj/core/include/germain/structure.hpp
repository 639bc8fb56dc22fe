#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "germain/modarith.hpp"

namespace germain {

struct FactoredInteger {
  uint64_t n = 1;
  std::vector<std::pair<uint64_t, int>> factors;  // (prime, exponent), primes ascending

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;
};

// Complete factorization for 1 <= n < 2^62: trial division by primes below
// 10^6, then Brent-cycle Pollard rho with a fixed parameter sequence, so the
// result is reproducible across runs and threads.
FactoredInteger factorize(uint64_t n);

uint64_t euler_phi(const FactoredInteger& f);

// Factored order of (Z/p^rZ)*, i.e. p^{r-1}(p-1), given p-1 already factored.
FactoredInteger unit_group_order(uint64_t p, int r, const FactoredInteger& p_minus_1);

struct OrderResult {
  Residue element;
  uint64_t order;
};

// Exact multiplicative order of a. group_order must be the factored order of
// the unit group mod a.modulus() (phi; callers usually know it already and
// this avoids refactoring it per element). Throws usage_error when a is not
// coprime to the modulus or group_order is not an exponent for a.
OrderResult multiplicative_order(const Residue& a, const FactoredInteger& group_order);

struct LiftResult {
  uint64_t witness;     // integer representative in [1, p-1]
  uint64_t order;       // its order in (Z/p^rZ)*
  uint64_t base_order;  // e, the order of a mod p
};

// For a of order e > 1 mod p, one of a and a^{e-1} (reduced mod p, then
// re-read mod p^r) has order e*p^{r-1} in (Z/p^rZ)*. Reducing the power mod
// p first is load-bearing: 3^4 mod 121 has order 5, while 3^4 mod 11 = 4 has
// order 55. Throws lemma_violation if neither candidate attains the order.
LiftResult maxfield_lift(uint64_t a, uint64_t p, int r);

// Special case for generators: one of a and a^{p-2} mod p generates
// (Z/p^rZ)*. Throws usage_error when a does not generate (Z/pZ)*.
LiftResult lebesgue_lift(uint64_t a, uint64_t p, int r);

}  // namespace germain
