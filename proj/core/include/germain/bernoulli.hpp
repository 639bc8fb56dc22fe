#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "germain/modarith.hpp"

namespace germain {

// Documented cap on table construction; values grow fast beyond this.
inline constexpr uint64_t kBernoulliIndexCap = 1000;

struct BernoulliNumber {
  uint64_t index = 0;
  mpq_class value;  // canonical: reduced, positive denominator
};

// B_0..B_max_index, exact. The defining relation B_r = sum C(r,n) B_n is an
// identity in which B_r cancels; the implementable reading solves the
// cancelled form 0 = sum_{n=0}^{r-1} C(r,n) B_n for B_{r-1}, which also
// forces B_1 = -1/2. Binomials come from a Pascal-row accumulator so no
// intermediate overflows machine words.
std::vector<BernoulliNumber> bernoulli_table(uint64_t max_index);

// b as an element of Z/p^2Z (numerator times inverse denominator). Throws
// irregular_reduction when p divides the denominator, which by von
// Staudt-Clausen is exactly the (p-1) | index case for even index.
Residue bernoulli_mod_p2(const BernoulliNumber& b, uint64_t p);

}  // namespace germain
