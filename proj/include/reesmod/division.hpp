#pragma once

#include <span>
#include <vector>

#include "reesmod/polynomial.hpp"

namespace reesmod {

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division of p by an ordered list of divisors.
///
/// At each step the leading term of the running dividend is cancelled by the
/// first divisor (in list order) whose leading monomial divides it; otherwise
/// the term moves to the remainder. Postcondition:
/// p = sum quotients[i] * divisors[i] + remainder, with no remainder term
/// divisible by any divisor's leading monomial.
DivisionResult multivariate_division(const Polynomial& p, std::span<const Polynomial> divisors);

}  // namespace reesmod
