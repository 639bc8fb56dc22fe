#include "germain/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "germain/sieve.hpp"

namespace germain {

namespace {

const std::vector<uint64_t>& trial_primes() {
  static const std::vector<uint64_t> primes = primes_up_to(1'000'000);
  return primes;
}

// Brent's cycle variant of Pollard rho with f(x) = x^2 + c, x0 = 2.
// Returns a nontrivial factor, or n when this c fails (caller retries).
uint64_t pollard_brent(uint64_t n, uint64_t c) {
  const auto f = [&](uint64_t x) { return add_mod(mul_mod(x, x, n), c % n, n); };
  uint64_t y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
  constexpr uint64_t kBatch = 128;
  while (g == 1) {
    x = y;
    for (uint64_t i = 0; i < r; ++i) y = f(y);
    for (uint64_t k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const uint64_t steps = std::min(kBatch, r - k);
      for (uint64_t i = 0; i < steps; ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
    r <<= 1;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split(uint64_t m, std::map<uint64_t, int>& out) {
  if (m == 1) return;
  if (is_prime(m)) {
    ++out[m];
    return;
  }
  uint64_t d = m;
  for (uint64_t c = 1; d == m; ++c) d = pollard_brent(m, c);
  split(d, out);
  split(m / d, out);
}

uint64_t checked_pow(uint64_t p, int r) {
  __uint128_t m = 1;
  for (int i = 0; i < r; ++i) {
    m *= p;
    if (m >= kMaxModulus) throw capacity_error("p^r exceeds the 2^62 modulus cap");
  }
  return uint64_t(m);
}

}  // namespace

FactoredInteger factorize(uint64_t n) {
  if (n == 0) throw usage_error("factorize: n must be >= 1");
  if (n >= kMaxModulus) throw capacity_error("factorize: n must be < 2^62");

  FactoredInteger out;
  out.n = n;
  uint64_t m = n;
  for (uint64_t p : trial_primes()) {
    if (p * p > m) break;
    if (m % p) continue;
    int e = 0;
    do {
      m /= p;
      ++e;
    } while (m % p == 0);
    out.factors.emplace_back(p, e);
  }
  if (m > 1) {
    if (is_prime(m)) {
      out.factors.emplace_back(m, 1);
    } else {
      std::map<uint64_t, int> rest;
      split(m, rest);
      for (auto [p, e] : rest) out.factors.emplace_back(p, e);
      std::sort(out.factors.begin(), out.factors.end());
    }
  }
  return out;
}

uint64_t euler_phi(const FactoredInteger& f) {
  uint64_t phi = 1;
  for (auto [p, e] : f.factors) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

FactoredInteger unit_group_order(uint64_t p, int r, const FactoredInteger& p_minus_1) {
  FactoredInteger g = p_minus_1;
  for (int i = 1; i < r; ++i) g.n *= p;
  if (r >= 2) g.factors.emplace_back(p, r - 1);  // p exceeds every factor of p-1
  return g;
}

OrderResult multiplicative_order(const Residue& a, const FactoredInteger& group_order) {
  if (std::gcd(a.value(), a.modulus()) != 1)
    throw usage_error("multiplicative_order: not coprime");
  if (pow_mod(a, group_order.n).value() != 1)
    throw usage_error("multiplicative_order: group_order is not an exponent for the element");

  uint64_t order = group_order.n;
  for (auto [ell, k] : group_order.factors) {
    for (int i = 0; i < k; ++i) {
      if (order % ell != 0) break;
      if (pow_mod(a, order / ell).value() != 1) break;
      order /= ell;
    }
  }
  return {a, order};
}

namespace {

// Shared tail of the two lifting lemmas: pick whichever of a, a1 attains the
// target order mod p^r.
LiftResult pick_lift(uint64_t a, uint64_t a1, uint64_t e, uint64_t p, int r,
                     const FactoredInteger& p_minus_1, const char* who) {
  const uint64_t m = checked_pow(p, r);
  uint64_t target = e;
  for (int i = 1; i < r; ++i) target *= p;

  const FactoredInteger phi = unit_group_order(p, r, p_minus_1);
  const uint64_t o_a = multiplicative_order(Residue(a, m), phi).order;
  if (o_a == target) return {a, o_a, e};
  const uint64_t o_a1 = multiplicative_order(Residue(a1, m), phi).order;
  if (o_a1 == target) return {a1, o_a1, e};

  throw lemma_violation(std::string(who) + ": neither candidate attains order " +
                        std::to_string(target) + " (a=" + std::to_string(a) +
                        " a1=" + std::to_string(a1) + " p=" + std::to_string(p) +
                        " r=" + std::to_string(r) + " orders " + std::to_string(o_a) + "," +
                        std::to_string(o_a1) + ")");
}

void validate_lift_args(uint64_t a, uint64_t p, int r) {
  if (r < 1) throw usage_error("lift: r must be >= 1");
  if (p < 3 || (p & 1) == 0 || !is_prime(p)) throw usage_error("lift: p must be an odd prime");
  if (a < 1 || a >= p) throw usage_error("lift: a must be in [1, p-1]");
}

}  // namespace

LiftResult maxfield_lift(uint64_t a, uint64_t p, int r) {
  validate_lift_args(a, p, r);
  const FactoredInteger fp = factorize(p - 1);
  const uint64_t e = multiplicative_order(Residue(a, p), fp).order;
  if (e == 1) throw usage_error("maxfield_lift: a has order 1 mod p");
  const uint64_t a1 = pow_mod(Residue(a, p), e - 1).value();  // least positive residue mod p
  return pick_lift(a, a1, e, p, r, fp, "maxfield_lift");
}

LiftResult lebesgue_lift(uint64_t a, uint64_t p, int r) {
  validate_lift_args(a, p, r);
  const FactoredInteger fp = factorize(p - 1);
  const uint64_t e = multiplicative_order(Residue(a, p), fp).order;
  if (e != p - 1) throw usage_error("lebesgue_lift: a does not generate (Z/pZ)*");
  const uint64_t a1 = pow_mod(Residue(a, p), p - 2).value();
  return pick_lift(a, a1, e, p, r, fp, "lebesgue_lift");
}

}  // namespace germain
