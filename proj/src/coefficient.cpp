#include "reesmod/coefficient.hpp"

#include <stdexcept>

namespace reesmod {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(p) + ")");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void same_kind(const Coefficient& a, const Coefficient& b) {
  if (a.is_rational() != b.is_rational() ||
      (!a.is_rational() && a.residue().modulus != b.residue().modulus)) {
    throw std::invalid_argument("coefficient field mismatch");
  }
}

}  // namespace

Coefficient::Coefficient(mpq_class q) : value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

Coefficient::Coefficient(Residue r) : value_(r) {
  if (r.modulus == 0 || r.value >= r.modulus) throw std::invalid_argument("residue out of range");
}

bool Coefficient::is_zero() const {
  if (is_rational()) return sgn(rational()) == 0;
  return residue().value == 0;
}

bool Coefficient::is_one() const {
  if (is_rational()) return rational() == 1;
  return residue().value == 1;
}

int Coefficient::sign() const {
  if (is_rational()) return sgn(rational());
  return residue().value == 0 ? 0 : 1;
}

bool Coefficient::is_integer() const {
  return is_rational() && rational().get_den() == 1;
}

Coefficient Coefficient::operator-() const {
  if (is_rational()) return Coefficient(mpq_class(-rational()));
  Residue r = residue();
  r.value = r.value == 0 ? 0 : r.modulus - r.value;
  return Coefficient(r);
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero coefficient");
  if (is_rational()) return Coefficient(mpq_class(1 / rational()));
  Residue r = residue();
  r.value = mod_inverse(r.value, r.modulus);
  return Coefficient(r);
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  same_kind(*this, o);
  if (is_rational()) {
    std::get<mpq_class>(value_) += o.rational();
  } else {
    auto& r = std::get<Residue>(value_);
    std::uint64_t s = std::uint64_t(r.value) + o.residue().value;
    r.value = static_cast<std::uint32_t>(s % r.modulus);
  }
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) { return *this += -o; }

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  same_kind(*this, o);
  if (is_rational()) {
    std::get<mpq_class>(value_) *= o.rational();
  } else {
    auto& r = std::get<Residue>(value_);
    std::uint64_t s = std::uint64_t(r.value) * o.residue().value;
    r.value = static_cast<std::uint32_t>(s % r.modulus);
  }
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  same_kind(*this, o);
  return *this *= o.inverse();
}

bool Coefficient::operator==(const Coefficient& o) const {
  if (is_rational() != o.is_rational()) return false;
  if (is_rational()) return rational() == o.rational();
  return residue() == o.residue();
}

std::string Coefficient::to_string() const {
  if (is_rational()) return rational().get_str();
  return std::to_string(residue().value);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t(1) << 31) || !is_prime(p)) {
    throw std::invalid_argument("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
  }
  return Field(Kind::Prime, static_cast<std::uint32_t>(p));
}

Coefficient Field::zero() const {
  if (is_rational()) return Coefficient(mpq_class(0));
  return Coefficient(Residue{0, p_});
}

Coefficient Field::one() const {
  if (is_rational()) return Coefficient(mpq_class(1));
  return Coefficient(Residue{1, p_});
}

Coefficient Field::from_integer(const mpz_class& n) const {
  if (is_rational()) return Coefficient(mpq_class(n));
  mpz_class r = n % p_;
  if (r < 0) r += p_;
  return Coefficient(Residue{static_cast<std::uint32_t>(r.get_ui()), p_});
}

Coefficient Field::from_rational(const mpq_class& q) const {
  if (is_rational()) return Coefficient(q);
  Coefficient den = from_integer(q.get_den());
  if (den.is_zero()) {
    throw std::domain_error("denominator " + q.get_den().get_str() + " vanishes in " + to_string());
  }
  return from_integer(q.get_num()) / den;
}

Coefficient Field::convert(const Coefficient& c) const {
  if (contains(c)) return c;
  if (!c.is_rational()) throw std::invalid_argument("cannot convert between distinct prime fields");
  return from_rational(c.rational());
}

bool Field::contains(const Coefficient& c) const {
  if (is_rational()) return c.is_rational();
  return !c.is_rational() && c.residue().modulus == p_;
}

std::string Field::to_string() const {
  if (is_rational()) return "QQ";
  return "GF(" + std::to_string(p_) + ")";
}

}  // namespace reesmod
