#include "reesmod/fraction.hpp"

#include <map>

namespace reesmod {

Fraction::Fraction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_ring(num_.ring(), den_.ring());
  if (den_.is_zero()) throw std::domain_error("fraction with zero denominator");
  normalize();
}

Fraction::Fraction(Polynomial p)
    : num_(std::move(p)), den_(Polynomial::constant(num_.ring(), 1)) {}

void Fraction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.ring(), 1);
    return;
  }
  if (!den_.is_constant()) {
    if (auto q = exact_quotient(num_, den_)) {
      num_ = std::move(*q);
      den_ = Polynomial::constant(num_.ring(), 1);
      return;
    }
  }
  if (!den_.leading_coefficient().is_one()) {
    Coefficient inv = den_.leading_coefficient().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

std::optional<Polynomial> Fraction::as_polynomial() const {
  if (den_.is_constant()) return num_.scaled(den_.leading_coefficient().inverse());
  return exact_quotient(num_, den_);
}

Fraction Fraction::operator-() const { return Fraction(-num_, den_); }

Fraction Fraction::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero fraction");
  return Fraction(den_, num_);
}

Fraction Fraction::pow(unsigned n) const {
  Fraction r(Polynomial::constant(ring(), 1));
  Fraction b = *this;
  while (n) {
    if (n & 1u) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  if (a.den_ == b.den_) return Fraction(a.num_ + b.num_, a.den_);
  if (auto q = exact_quotient(a.den_, b.den_)) return Fraction(a.num_ + b.num_ * *q, a.den_);
  if (auto q = exact_quotient(b.den_, a.den_)) return Fraction(a.num_ * *q + b.num_, b.den_);
  return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

Fraction operator*(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inverse(); }

bool Fraction::operator==(const Fraction& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

namespace {

// A single power x^k with coefficient 1 needs no parentheses after '/'.
bool is_variable_power(const Polynomial& p) {
  if (p.size() != 1 || !p.leading_coefficient().is_one()) return false;
  int vars = 0;
  for (auto e : p.leading_monomial()) vars += e != 0;
  return vars == 1;
}

}  // namespace

std::string Fraction::to_string() const {
  if (den_.is_constant() && den_.leading_coefficient().is_one()) return num_.to_string();
  std::string n = num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  std::string d = is_variable_power(den_) ? den_.to_string() : "(" + den_.to_string() + ")";
  return n + "/" + d;
}

Fraction substitute(const Polynomial& p, std::span<const Fraction> images) {
  if (images.size() != p.ring().nvars()) throw std::invalid_argument("substitution arity mismatch");
  if (images.empty()) throw std::invalid_argument("substitution needs a target ring");
  const PolyRing& target = images.front().ring();
  std::vector<std::map<Exponent, Fraction>> powers(images.size());
  auto power = [&](std::size_t var, Exponent e) -> const Fraction& {
    auto it = powers[var].find(e);
    if (it == powers[var].end()) it = powers[var].emplace(e, images[var].pow(e)).first;
    return it->second;
  };
  Fraction sum{Polynomial(target)};
  for (const auto& t : p.terms()) {
    Fraction term(Polynomial::constant(target, target.field().convert(t.coefficient)));
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.monomial[i] != 0) term = term * power(i, t.monomial[i]);
    }
    sum = sum + term;
  }
  return sum;
}

}  // namespace reesmod
