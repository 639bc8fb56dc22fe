#pragma once

#include <stdexcept>

namespace germain {

// Caller broke a documented precondition (bad range, modulus mismatch,
// non-coprime inverse, ...).
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input exceeds a documented capacity bound (modulus width, sieve range,
// Bernoulli index cap, ...).
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An order-lifting guarantee failed to hold. Must never fire on valid
// inputs; the lemma checkers turn it into a failing report.
struct lemma_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduction of a Bernoulli number mod p^2 where p divides the denominator.
// Callers are expected to skip these indices.
struct irregular_reduction : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace germain
