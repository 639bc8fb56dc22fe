#pragma once

#include <cstdint>

#include "germain/errors.hpp"

namespace germain {

// Exclusive upper bound on moduli. Keeps every product of two residues below
// 2^124, so a 128-bit intermediate never wraps, and leaves room for q^2 with
// q up to 2^31.
inline constexpr uint64_t kMaxModulus = uint64_t(1) << 62;

// An element of Z/mZ. value() < modulus() holds after every operation.
class Residue {
 public:
  Residue(uint64_t value, uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2 || modulus >= kMaxModulus)
      throw usage_error("Residue: modulus must be in [2, 2^62)");
    value_ = value % modulus;
  }

  uint64_t value() const { return value_; }
  uint64_t modulus() const { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  uint64_t value_;
  uint64_t modulus_;
};

// Raw helpers on machine words; moduli must be in [1, 2^62). These back the
// Residue operations and are used directly in hot loops.
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t base, uint64_t exponent, uint64_t m);
uint64_t inv_mod(uint64_t a, uint64_t m);  // throws usage_error("not coprime")

Residue mul_mod(const Residue& a, const Residue& b);
Residue add_mod(const Residue& a, const Residue& b);
Residue sub_mod(const Residue& a, const Residue& b);
Residue pow_mod(const Residue& base, uint64_t exponent);
Residue inv_mod(const Residue& a);

}  // namespace germain
