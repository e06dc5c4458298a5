#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "reesmod/interpreter.hpp"

namespace support {

using namespace reesmod;

inline PolyRing ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex(),
                     Field field = Field::rationals()) {
  return PolyRing(std::move(names), field, order);
}

inline Polynomial P(const PolyRing& r, std::string_view text) {
  auto p = script::evaluate(text, r).as_polynomial();
  if (!p) throw std::invalid_argument("not a polynomial: " + std::string(text));
  return *p;
}

inline Fraction F(const PolyRing& r, std::string_view text) { return script::evaluate(text, r); }

inline Ideal I(const PolyRing& r, std::initializer_list<std::string_view> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(P(r, g));
  return Ideal(r, std::move(ps));
}

inline std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

/// Seeded generator of small random polynomials and monomials.
class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Monomial monomial(std::size_t nvars, Exponent max_exp) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m[i] = static_cast<Exponent>(integer(0, static_cast<int>(max_exp)));
    return m;
  }

  /// Monomial of total degree at most `max_deg`.
  Monomial bounded_monomial(std::size_t nvars, unsigned max_deg) {
    Monomial m(nvars);
    unsigned budget = static_cast<unsigned>(integer(0, static_cast<int>(max_deg)));
    for (unsigned k = 0; k < budget; ++k) m[static_cast<std::size_t>(integer(0, static_cast<int>(nvars) - 1))] += 1;
    return m;
  }

  Polynomial polynomial(const PolyRing& r, unsigned max_deg, int max_terms, int coeff = 5) {
    std::vector<Term> terms;
    int n = integer(1, max_terms);
    for (int k = 0; k < n; ++k) {
      int c = integer(-coeff, coeff);
      if (c == 0) c = 1;
      terms.push_back({bounded_monomial(r.nvars(), max_deg), r.field().from_integer(c)});
    }
    return Polynomial::from_terms(r, std::move(terms));
  }

  Polynomial nonzero_polynomial(const PolyRing& r, unsigned max_deg, int max_terms) {
    while (true) {
      Polynomial p = polynomial(r, max_deg, max_terms);
      if (!p.is_zero()) return p;
    }
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace support
