#include "reesmod/division.hpp"

namespace reesmod {

DivisionResult multivariate_division(const Polynomial& p, std::span<const Polynomial> divisors) {
  const PolyRing& ring = p.ring();
  for (const auto& d : divisors) {
    require_same_ring(ring, d.ring());
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  }
  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<Term> remainder_terms;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const Term& lead = rest.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial& d = divisors[i];
      if (!d.leading_monomial().divides(lead.monomial)) continue;
      Monomial m = lead.monomial / d.leading_monomial();
      Coefficient c = lead.coefficient / d.leading_coefficient();
      rest = rest.add_scaled(-c, m, d);
      quotient_terms[i].push_back(Term{std::move(m), std::move(c)});
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder_terms.push_back(lead);
      rest.drop_leading_term();
    }
  }
  DivisionResult out{{}, Polynomial::from_terms(ring, std::move(remainder_terms))};
  out.quotients.reserve(divisors.size());
  for (auto& q : quotient_terms) out.quotients.push_back(Polynomial::from_terms(ring, std::move(q)));
  return out;
}

}  // namespace reesmod
