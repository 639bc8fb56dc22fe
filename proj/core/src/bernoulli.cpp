#include "germain/bernoulli.hpp"

#include "germain/sieve.hpp"

namespace germain {

std::vector<BernoulliNumber> bernoulli_table(uint64_t max_index) {
  if (max_index > kBernoulliIndexCap)
    throw capacity_error("bernoulli_table: max_index capped at 1000");

  std::vector<BernoulliNumber> table(max_index + 1);
  for (uint64_t i = 0; i <= max_index; ++i) table[i].index = i;
  table[0].value = 1;

  // Pascal row for C(r, .), grown in place one r at a time.
  std::vector<mpz_class> row{1};
  for (uint64_t r = 1; r <= max_index + 1; ++r) {
    row.emplace_back(1);
    for (uint64_t n = r - 1; n >= 1; --n) row[n] += row[n - 1];
    if (r < 2) continue;

    // 0 = sum_{n=0}^{r-1} C(r,n) B_n, solved for B_{r-1}.
    mpq_class sum = 0;
    for (uint64_t n = 0; n + 2 <= r; ++n) sum += table[n].value * row[n];
    mpq_class b = -sum / mpq_class(r);
    b.canonicalize();
    table[r - 1].value = b;
  }
  return table;
}

Residue bernoulli_mod_p2(const BernoulliNumber& b, uint64_t p) {
  if (p < 3 || (p & 1) == 0 || !is_prime(p))
    throw usage_error("bernoulli_mod_p2: p must be an odd prime");
  if (p >= (uint64_t(1) << 31))
    throw capacity_error("bernoulli_mod_p2: p^2 exceeds the modulus cap");

  const mpz_class& den = b.value.get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), p))
    throw irregular_reduction("bernoulli_mod_p2: irregular reduction, p divides denominator of B_" +
                              std::to_string(b.index));

  const uint64_t p2 = p * p;
  // Floor division keeps remainders nonnegative for negative numerators.
  const uint64_t num_mod = mpz_fdiv_ui(b.value.get_num().get_mpz_t(), p2);
  const uint64_t den_mod = mpz_fdiv_ui(den.get_mpz_t(), p2);
  return {mul_mod(num_mod, inv_mod(den_mod, p2), p2), p2};
}

}  // namespace germain
