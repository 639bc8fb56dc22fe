#include "germain/verify.hpp"

#include <bit>
#include <numeric>

namespace germain {

namespace {

void wit(CheckReport& rep, std::string key, uint64_t value) {
  rep.witness.emplace_back(std::move(key), value);
}

CheckReport make_report(std::string check, std::string instance, bool passed) {
  CheckReport rep;
  rep.check = std::move(check);
  rep.instance = std::move(instance);
  rep.passed = passed;
  return rep;
}

std::string p_instance(uint64_t p) { return "p=" + std::to_string(p); }

void validate_pair(const SophieGermainPair& pair) {
  if (!is_prime(pair.p) || pair.q != 2 * pair.p + 1 || !is_prime(pair.q) ||
      pair.p_mod_4 != (pair.p & 3))
    throw usage_error("SophieGermainPair: not a valid pair");
  if (pair.p_mod_4 != 3) throw usage_error("theorem checkers require p = 3 (mod 4)");
  if (pair.q >= (uint64_t(1) << 31))
    throw capacity_error("q^2 exceeds the 2^62 modulus cap");
}

// splitmix64; fixed stream so suites are reproducible from the seed alone.
struct SplitMix {
  uint64_t state;
  uint64_t operator()() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [1, n]
  uint64_t one_to(uint64_t n) { return 1 + (*this)() % n; }
};

}  // namespace

CheckReport check_lemma_hw(uint64_t p) {
  if (p <= 7 || p % 4 != 3 || !is_prime(p))
    throw usage_error("check_lemma_hw: p must be a prime > 7 with p = 3 (mod 4)");
  const uint64_t q = 2 * p + 1;
  const bool q_prime = is_prime(q);
  const uint64_t residue = pow_mod(2, p, q);

  CheckReport rep = make_report("lemma_hw", p_instance(p), q_prime == (residue == 1));
  wit(rep, "q", q);
  wit(rep, "q_prime", q_prime);
  wit(rep, "two_pow_p_mod_q", residue);
  return rep;
}

std::vector<CheckReport> check_lemma_bw(uint64_t q, uint64_t search_bound) {
  if (q < 3 || q > 61 || !is_prime(q))
    throw usage_error("check_lemma_bw: q must be an odd prime <= 61");
  if (search_bound >= (uint64_t(1) << 31))
    throw capacity_error("check_lemma_bw: search_bound^2 exceeds the modulus cap");

  std::vector<CheckReport> out;
  // Every prime divisor of M_q has the form 1 + 2kq.
  for (uint64_t p = 2 * q + 1; p <= search_bound; p += 2 * q) {
    if (!is_prime(p)) continue;
    if (pow_mod(2, q, p) != 1) continue;  // p does not divide M_q

    const uint64_t half = pow_mod(2, (p - 1) / 2, p);
    CheckReport part_a = make_report(
        "lemma_bw_a", "q=" + std::to_string(q) + " p=" + std::to_string(p), half == 1);
    wit(part_a, "two_pow_half_mod_p", half);
    out.push_back(std::move(part_a));

    const uint64_t p2 = p * p;
    if (pow_mod(2, q, p2) == 1) {
      // p^2 | M_q: the divisor must then be a Wieferich prime.
      const uint64_t fermat = pow_mod(2, p - 1, p2);
      CheckReport part_b = make_report(
          "lemma_bw_b", "q=" + std::to_string(q) + " p=" + std::to_string(p), fermat == 1);
      wit(part_b, "two_pow_pm1_mod_p2", fermat);
      out.push_back(std::move(part_b));
    }
  }
  return out;
}

CheckReport check_lemma_el(uint64_t p, uint64_t nu,
                           const std::vector<BernoulliNumber>& table) {
  if (p < 3 || !is_prime(p)) throw usage_error("check_lemma_el: p must be an odd prime");
  if (nu < 2) throw usage_error("check_lemma_el: nu must be >= 2");
  if (nu >= table.size()) throw usage_error("check_lemma_el: Bernoulli table too small");
  if (p >= (uint64_t(1) << 31)) throw capacity_error("check_lemma_el: p^2 exceeds the modulus cap");
  if ((nu - 1) % (p - 1) == 0)
    throw usage_error("check_lemma_el: hypothesis requires nu != 1 (mod p-1)");

  const std::string instance = "p=" + std::to_string(p) + " nu=" + std::to_string(nu);
  if (nu % (p - 1) == 0) {
    CheckReport rep = make_report("lemma_el", instance, true);
    rep.skipped = true;
    rep.note = "irregular reduction: (p-1) | nu";
    return rep;
  }

  const uint64_t p2 = p * p;
  uint64_t lhs = 0;
  for (uint64_t r = 1; r < p; ++r) lhs = add_mod(lhs, pow_mod(r, nu, p2), p2);
  const uint64_t rhs = mul_mod(p, bernoulli_mod_p2(table[nu], p).value(), p2);

  CheckReport rep = make_report("lemma_el", instance, lhs == rhs);
  wit(rep, "power_sum_mod_p2", lhs);
  wit(rep, "p_bernoulli_mod_p2", rhs);
  return rep;
}

namespace {

// One lifting report; recomputes both candidate orders on a violation so the
// failed report carries the counterexample.
CheckReport lift_report(const char* check, uint64_t a, uint64_t p, int r, bool lebesgue) {
  CheckReport rep = make_report(check, "p=" + std::to_string(p) + " r=" + std::to_string(r) +
                                            " a=" + std::to_string(a),
                                false);
  try {
    const LiftResult lift = lebesgue ? lebesgue_lift(a, p, r) : maxfield_lift(a, p, r);
    rep.passed = true;
    wit(rep, "witness", lift.witness);
    wit(rep, "order", lift.order);
    wit(rep, "base_order", lift.base_order);
  } catch (const lemma_violation& ex) {
    rep.passed = false;
    rep.note = ex.what();
    const FactoredInteger fp = factorize(p - 1);
    const uint64_t e = multiplicative_order(Residue(a, p), fp).order;
    uint64_t m = 1;
    for (int i = 0; i < r; ++i) m *= p;
    const FactoredInteger phi = unit_group_order(p, r, fp);
    const uint64_t a1 = pow_mod(Residue(a, p), lebesgue ? p - 2 : e - 1).value();
    wit(rep, "base_order", e);
    wit(rep, "candidate_a", a);
    wit(rep, "order_a", multiplicative_order(Residue(a, m), phi).order);
    wit(rep, "candidate_a1", a1);
    wit(rep, "order_a1", multiplicative_order(Residue(a1, m), phi).order);
  }
  return rep;
}

}  // namespace

std::vector<CheckReport> check_lemma_mf(uint64_t p, int r) {
  if (r != 2 && r != 3) throw usage_error("check_lemma_mf: r must be 2 or 3");
  if (p < 3 || !is_prime(p)) throw usage_error("check_lemma_mf: p must be an odd prime");

  std::vector<CheckReport> out;
  for (uint64_t a = 2; a < p; ++a) out.push_back(lift_report("lemma_mf", a, p, r, false));
  return out;
}

std::vector<CheckReport> check_lemma_vl(uint64_t p, int r) {
  if (r != 2 && r != 3) throw usage_error("check_lemma_vl: r must be 2 or 3");
  if (p < 3 || !is_prime(p)) throw usage_error("check_lemma_vl: p must be an odd prime");

  const FactoredInteger fp = factorize(p - 1);
  std::vector<CheckReport> out;
  for (uint64_t a = 2; a < p; ++a) {
    if (multiplicative_order(Residue(a, p), fp).order != p - 1) continue;
    out.push_back(lift_report("lemma_vl", a, p, r, true));
  }
  return out;
}

std::vector<CheckReport> check_order_laws(uint64_t trials, uint64_t seed) {
  static const std::vector<uint64_t> primes = primes_up_to(100'000);
  SplitMix rng{seed};
  std::vector<CheckReport> out;
  out.reserve(trials * 3);

  for (uint64_t t = 0; t < trials; ++t) {
    const uint64_t m = primes[1 + rng() % (primes.size() - 1)];  // odd prime
    const FactoredInteger fm = factorize(m - 1);
    const uint64_t x = rng.one_to(m - 1);
    const uint64_t y = rng.one_to(m - 1);
    const uint64_t ox = multiplicative_order(Residue(x, m), fm).order;
    const uint64_t oy = multiplicative_order(Residue(y, m), fm).order;
    const std::string tag = " m=" + std::to_string(m);

    if (std::gcd(ox, oy) == 1) {
      const uint64_t oxy =
          multiplicative_order(mul_mod(Residue(x, m), Residue(y, m)), fm).order;
      CheckReport rep =
          make_report("lemma_orders_a", "trial=" + std::to_string(t) + tag, oxy == ox * oy);
      wit(rep, "m", m);
      wit(rep, "x", x);
      wit(rep, "y", y);
      wit(rep, "order_x", ox);
      wit(rep, "order_y", oy);
      wit(rep, "order_xy", oxy);
      out.push_back(std::move(rep));
    }

    // Constructed coprime-order pair: project x onto the odd part and y onto
    // the 2-part of the group, so hypothesis coverage never degenerates.
    {
      const int s = std::countr_zero(m - 1);
      const uint64_t xo = pow_mod(Residue(x, m), uint64_t(1) << s).value();
      const uint64_t y2 = pow_mod(Residue(y, m), (m - 1) >> s).value();
      const uint64_t oxo = multiplicative_order(Residue(xo, m), fm).order;
      const uint64_t oy2 = multiplicative_order(Residue(y2, m), fm).order;
      const uint64_t oprod =
          multiplicative_order(mul_mod(Residue(xo, m), Residue(y2, m)), fm).order;
      CheckReport rep =
          make_report("lemma_orders_a", "trial=" + std::to_string(t) + tag + " constructed",
                      std::gcd(oxo, oy2) == 1 && oprod == oxo * oy2);
      wit(rep, "m", m);
      wit(rep, "x", xo);
      wit(rep, "y", y2);
      wit(rep, "order_x", oxo);
      wit(rep, "order_y", oy2);
      wit(rep, "order_xy", oprod);
      out.push_back(std::move(rep));
    }

    {
      const uint64_t r = rng.one_to(4 * m);
      const uint64_t oxr = multiplicative_order(pow_mod(Residue(x, m), r), fm).order;
      CheckReport rep = make_report("lemma_orders_b", "trial=" + std::to_string(t) + tag,
                                    oxr == ox / std::gcd(ox, r));
      wit(rep, "m", m);
      wit(rep, "x", x);
      wit(rep, "r", r);
      wit(rep, "order_x", ox);
      wit(rep, "order_x_pow_r", oxr);
      out.push_back(std::move(rep));
    }
  }
  return out;
}

CheckReport check_theorem1(const SophieGermainPair& pair) {
  validate_pair(pair);
  const uint64_t q = pair.q, q2 = q * q;
  const uint64_t mod_q = pow_mod(2, pair.p, q);
  const uint64_t mod_q2 = pow_mod(2, pair.p, q2);

  CheckReport rep = make_report("theorem1", p_instance(pair.p), mod_q == 1 && mod_q2 != 1);
  wit(rep, "q", q);
  wit(rep, "two_pow_p_mod_q", mod_q);
  wit(rep, "two_pow_p_mod_q2", mod_q2);
  return rep;
}

CheckReport check_theorem2(const SophieGermainPair& pair) {
  validate_pair(pair);
  const uint64_t q = pair.q, q2 = q * q;
  const uint64_t fermat = pow_mod(2, q - 1, q2);  // q-1 = 2p
  const uint64_t half = pow_mod(2, pair.p, q2);
  const uint64_t mod_q = pow_mod(2, pair.p, q);

  // 2^{2p} is the square of 2^p mod q^2, and q never divides 2^p + 1, so the
  // verdict must match theorem 1's second clause.
  const bool square_consistent = mul_mod(half, half, q2) == fermat;
  const bool q_ndiv_2p_plus_1 = (mod_q + 1) % q != 0;
  const bool agrees = (fermat != 1) == (half != 1);

  CheckReport rep = make_report("theorem2", p_instance(pair.p),
                                fermat != 1 && square_consistent && q_ndiv_2p_plus_1 && agrees);
  wit(rep, "q", q);
  wit(rep, "two_pow_2p_mod_q2", fermat);
  wit(rep, "two_pow_p_mod_q2", half);
  wit(rep, "two_pow_p_mod_q", mod_q);
  return rep;
}

std::vector<CheckReport> check_proof_identities(const SophieGermainPair& pair) {
  validate_pair(pair);
  const uint64_t p = pair.p, q = pair.q, q2 = q * q;
  std::vector<CheckReport> out;

  {
    // (i) sum of squares: direct summation vs q * inv(6) vs q(q-1)(2q-1)/6.
    uint64_t sum = 0;
    for (uint64_t r = 1; r < q; ++r) sum = add_mod(sum, mul_mod(r, r, q2), q2);
    const uint64_t inv6 = inv_mod(6, q2);
    const uint64_t q_over_6 = mul_mod(q, inv6, q2);
    const uint64_t closed =
        mul_mod(mul_mod(mul_mod(q, q - 1, q2), 2 * q - 1, q2), inv6, q2);

    CheckReport rep =
        make_report("proof1_square_sum", p_instance(p), sum == q_over_6 && sum == closed);
    wit(rep, "q", q);
    wit(rep, "sum_r2_mod_q2", sum);
    wit(rep, "q_inv6_mod_q2", q_over_6);
    wit(rep, "closed_form_mod_q2", closed);
    out.push_back(std::move(rep));
  }

  {
    // (ii) geometric sum of 4^k vs (4^q - 1) * inv(3).
    uint64_t sum = 0, term = 1;
    for (uint64_t k = 0; k < q; ++k) {
      sum = add_mod(sum, term, q2);
      term = mul_mod(term, 4, q2);
    }
    const uint64_t rhs = mul_mod(sub_mod(pow_mod(4, q, q2), 1, q2), inv_mod(3, q2), q2);

    CheckReport rep = make_report("proof1_geometric", p_instance(p), sum == rhs);
    wit(rep, "q", q);
    wit(rep, "sum_4k_mod_q2", sum);
    wit(rep, "geometric_closed_mod_q2", rhs);
    out.push_back(std::move(rep));
  }

  {
    // (iii) -2 generates both mod q and mod q^2; 2 has order pq mod q^2.
    // |(Z/q^2Z)*| = 2pq and |(Z/qZ)*| = 2p factor trivially for a pair.
    const FactoredInteger full{2 * p * q, {{2, 1}, {p, 1}, {q, 1}}};
    const FactoredInteger sub{2 * p, {{2, 1}, {p, 1}}};
    const uint64_t o2 = multiplicative_order(Residue(2, q2), full).order;
    const uint64_t om2 = multiplicative_order(Residue(q2 - 2, q2), full).order;
    const uint64_t om2_q = multiplicative_order(Residue(q - 2, q), sub).order;

    CheckReport rep = make_report("proof2_generator_orders", p_instance(p),
                                  o2 == p * q && om2 == 2 * p * q && om2_q == 2 * p);
    wit(rep, "q", q);
    wit(rep, "order_2_mod_q2", o2);
    wit(rep, "order_minus2_mod_q2", om2);
    wit(rep, "order_minus2_mod_q", om2_q);
    out.push_back(std::move(rep));
  }

  {
    // (iv) the lifting dichotomy at e = p, r = 2 on the base 2.
    CheckReport rep = make_report("proof3_maxfield_dichotomy", p_instance(p), false);
    try {
      const LiftResult lift = maxfield_lift(2, q, 2);
      rep.passed = lift.order == p * q && lift.base_order == p;
      wit(rep, "q", q);
      wit(rep, "witness", lift.witness);
      wit(rep, "order", lift.order);
      wit(rep, "base_order", lift.base_order);
    } catch (const lemma_violation& ex) {
      rep.passed = false;
      rep.note = ex.what();
      wit(rep, "q", q);
    }
    out.push_back(std::move(rep));
  }

  return out;
}

}  // namespace germain
