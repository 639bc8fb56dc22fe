#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "germain/bernoulli.hpp"
#include "germain/sieve.hpp"
#include "germain/structure.hpp"

namespace germain {

// One machine-checked instance of a lemma, theorem, or proof step. A failed
// report always carries the witness values that refute the claim; a skipped
// report carries the reason in note.
struct CheckReport {
  std::string check;
  std::string instance;
  bool passed = false;
  bool skipped = false;
  std::vector<std::pair<std::string, uint64_t>> witness;
  std::string note;
};

// q = 2p+1 is prime iff 2^p = 1 (mod q), for prime p > 7 with p = 3 mod 4.
// Evaluates both sides independently and passes iff they agree.
CheckReport check_lemma_hw(uint64_t p);

// Prime divisors p of M_q = 2^q - 1 satisfy 2^{(p-1)/2} = 1 (mod p), and a
// square divisor p^2 | M_q forces the Wieferich condition on p. Enumerates
// divisors below search_bound through the p = 1 (mod 2q) form. q must be an
// odd prime <= 61.
std::vector<CheckReport> check_lemma_bw(uint64_t q, uint64_t search_bound);

// Power-sum congruence sum_{r=1}^{p-1} r^nu = p*B_nu (mod p^2) for odd prime
// p and nu >= 2 with nu != 1 (mod p-1). Returns a skipped report when
// (p-1) | nu (B_nu does not reduce mod p^2). table must extend through nu.
CheckReport check_lemma_el(uint64_t p, uint64_t nu, const std::vector<BernoulliNumber>& table);

// Order lifting over every a in [2, p-1] (maxfield) or every generator
// (lebesgue); one report per element, r in {2, 3}.
std::vector<CheckReport> check_lemma_mf(uint64_t p, int r);
std::vector<CheckReport> check_lemma_vl(uint64_t p, int r);

// Randomized order laws in (Z/mZ)* for random primes m < 10^5:
//   a) o(xy) = o(x)o(y) when gcd(o(x), o(y)) = 1, on sampled pairs whenever
//      the hypothesis holds and on a constructed odd-order/2-power-order
//      pair each trial so coverage is never vacuous;
//   b) o(x^r) = o(x)/gcd(o(x), r) for random r in [1, 4m].
// Reports carry (m, x, y, r, orders) so they can be re-verified externally.
std::vector<CheckReport> check_order_laws(uint64_t trials, uint64_t seed);

// q || 2^p - 1: passes iff 2^p = 1 (mod q) and 2^p != 1 (mod q^2).
CheckReport check_theorem1(const SophieGermainPair& pair);

// q is not Wieferich: passes iff 2^{q-1} != 1 (mod q^2), with the verdict
// cross-checked against theorem 1's second clause and q not dividing 2^p + 1.
CheckReport check_theorem2(const SophieGermainPair& pair);

// The unconditional identities inside the three proofs, checked on a genuine
// pair (p = 3 mod 4, q = 2p+1 both prime):
//   (i)  sum r^2 over [1, q-1] = q/6 (mod q^2), by direct summation and by
//        the closed form q(q-1)(2q-1)/6;
//   (ii) sum 4^k over [0, q-1] = (4^q - 1)/3 (mod q^2), division realized as
//        multiplication by the inverse of 3;
//   (iii) o_{q^2}(2) = pq, o_{q^2}(-2) = 2pq, o_q(-2) = 2p;
//   (iv) the order-lifting dichotomy at e = p, r = 2: one of the integers 2
//        and 2^{p-1} mod q has order pq in (Z/q^2Z)*.
std::vector<CheckReport> check_proof_identities(const SophieGermainPair& pair);

}  // namespace germain
