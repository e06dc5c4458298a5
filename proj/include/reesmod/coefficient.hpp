#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace reesmod {

/// Element of Z/pZ. `modulus` is carried so that mixing fields is detectable.
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 0;
  bool operator==(const Residue&) const = default;
};

/// An exact field element: a rational in lowest terms or a residue modulo a
/// prime p < 2^31. Arithmetic between the two kinds (or between different
/// primes) throws std::invalid_argument.
class Coefficient {
 public:
  Coefficient() : value_(mpq_class(0)) {}
  explicit Coefficient(mpq_class q);
  explicit Coefficient(long n) : Coefficient(mpq_class(n)) {}
  explicit Coefficient(Residue r);

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  const Residue& residue() const { return std::get<Residue>(value_); }

  bool is_zero() const;
  bool is_one() const;
  /// Sign for rationals; 0 or 1 for residues.
  int sign() const;
  /// True when this is a rational with denominator 1.
  bool is_integer() const;

  Coefficient operator-() const;
  Coefficient inverse() const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }

  bool operator==(const Coefficient& o) const;

  /// `a/b` for rationals (or `a` when b = 1), the residue in [0, p) otherwise.
  std::string to_string() const;

 private:
  std::variant<mpq_class, Residue> value_;
};

/// Descriptor of a coefficient field: QQ or GF(p).
class Field {
 public:
  enum class Kind { Rational, Prime };

  static Field rationals() { return Field(Kind::Rational, 0); }
  /// Throws std::invalid_argument unless p is prime and p < 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  /// 0 for QQ.
  std::uint32_t characteristic() const { return p_; }

  Coefficient zero() const;
  Coefficient one() const;
  Coefficient from_integer(const mpz_class& n) const;
  /// Maps a rational into this field; throws std::domain_error when the
  /// denominator vanishes mod p.
  Coefficient from_rational(const mpq_class& q) const;
  /// Re-expresses a coefficient of another field (QQ -> GF(p) only).
  Coefficient convert(const Coefficient& c) const;
  bool contains(const Coefficient& c) const;

  std::string to_string() const;
  bool operator==(const Field&) const = default;

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace reesmod
