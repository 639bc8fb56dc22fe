#pragma once

#include <cstdint>

#include "germain/errors.hpp"
#include "germain/modarith.hpp"

namespace germain {

// Montgomery-form arithmetic with R = 2^64 for an odd modulus < 2^62.
// Optional fast path for the scan loops; results are bit-identical to the
// plain mul_mod/pow_mod route (property-tested in test_modarith).
class Montgomery {
 public:
  explicit Montgomery(uint64_t modulus) : n_(modulus) {
    if (modulus < 3 || modulus >= kMaxModulus || (modulus & 1) == 0)
      throw usage_error("Montgomery: modulus must be odd and in [3, 2^62)");
    // -n^{-1} mod 2^64 by Newton iteration; five steps double the precision
    // from the 5 correct low bits of n as its own inverse mod 32.
    uint64_t inv = n_;
    for (int i = 0; i < 5; ++i) inv *= 2 - n_ * inv;
    ninv_ = ~inv + 1;
    const __uint128_t r = (__uint128_t(1) << 64) % n_;
    r2_ = uint64_t((r * r) % n_);
  }

  uint64_t modulus() const { return n_; }

  // Montgomery product of two Montgomery-form operands.
  uint64_t mul(uint64_t a, uint64_t b) const { return redc(__uint128_t(a) * b); }

  uint64_t to_mont(uint64_t x) const { return mul(x % n_, r2_); }
  uint64_t from_mont(uint64_t x) const { return redc(x); }

  // base^exponent mod n with plain-domain input and output.
  uint64_t pow(uint64_t base, uint64_t exponent) const {
    uint64_t x = to_mont(base);
    uint64_t acc = to_mont(1);
    while (exponent) {
      if (exponent & 1) acc = mul(acc, x);
      x = mul(x, x);
      exponent >>= 1;
    }
    return from_mont(acc);
  }

 private:
  uint64_t redc(__uint128_t t) const {
    const uint64_t m = uint64_t(t) * ninv_;
    const uint64_t r = uint64_t((t + __uint128_t(m) * n_) >> 64);
    return r >= n_ ? r - n_ : r;
  }

  uint64_t n_;
  uint64_t ninv_;  // -n^{-1} mod 2^64
  uint64_t r2_;    // 2^128 mod n
};

}  // namespace germain
