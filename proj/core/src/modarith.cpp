#include "germain/modarith.hpp"

namespace germain {

namespace {

void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus())
    throw usage_error("modarith: modulus mismatch");
}

}  // namespace

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return uint64_t((__uint128_t(a) * b) % m);
}

uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
  // a, b < m < 2^62, so the sum cannot wrap.
  const uint64_t s = a + b;
  return s >= m ? s - m : s;
}

uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m) {
  return a >= b ? a - b : a + m - b;
}

uint64_t pow_mod(uint64_t base, uint64_t exponent, uint64_t m) {
  uint64_t acc = 1 % m;
  uint64_t b = base % m;
  while (exponent) {
    if (exponent & 1) acc = mul_mod(acc, b, m);
    b = mul_mod(b, b, m);
    exponent >>= 1;
  }
  return acc;
}

uint64_t inv_mod(uint64_t a, uint64_t m) {
  // Extended Euclid; Bezout coefficients stay below the modulus, but the
  // update step can briefly need a sign, hence the 128-bit accumulators.
  a %= m;
  __int128 t = 0, t_next = 1;
  uint64_t r = m, r_next = a;
  while (r_next != 0) {
    const uint64_t quot = r / r_next;
    const __int128 t_tmp = t - __int128(quot) * t_next;
    t = t_next;
    t_next = t_tmp;
    const uint64_t r_tmp = r - quot * r_next;
    r = r_next;
    r_next = r_tmp;
  }
  if (r != 1) throw usage_error("inv_mod: not coprime");
  __int128 res = t % __int128(m);
  if (res < 0) res += m;
  return uint64_t(res);
}

Residue mul_mod(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return {mul_mod(a.value(), b.value(), a.modulus()), a.modulus()};
}

Residue add_mod(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return {add_mod(a.value(), b.value(), a.modulus()), a.modulus()};
}

Residue sub_mod(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return {sub_mod(a.value(), b.value(), a.modulus()), a.modulus()};
}

Residue pow_mod(const Residue& base, uint64_t exponent) {
  return {pow_mod(base.value(), exponent, base.modulus()), base.modulus()};
}

Residue inv_mod(const Residue& a) {
  return {inv_mod(a.value(), a.modulus()), a.modulus()};
}

}  // namespace germain
