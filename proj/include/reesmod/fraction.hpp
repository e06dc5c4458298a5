#pragma once

#include <optional>
#include <span>
#include <string>

#include "reesmod/polynomial.hpp"

namespace reesmod {

/// Element num/den of the fraction field of a polynomial ring. No
/// polynomial gcd is taken: the denominator is kept monic and divided out
/// only when it divides the numerator exactly.
class Fraction {
 public:
  Fraction(Polynomial num, Polynomial den);
  explicit Fraction(Polynomial p);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const PolyRing& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }

  /// The polynomial equal to this fraction, if any.
  std::optional<Polynomial> as_polynomial() const;

  Fraction operator-() const;
  Fraction inverse() const;
  Fraction pow(unsigned n) const;
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);

  /// a/b == c/d iff a*d - b*c = 0.
  bool operator==(const Fraction& o) const;

  /// `num` when the denominator is 1, otherwise `(num)/(den)`.
  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// Evaluates p with variable i replaced by images[i]. All images share one ring.
Fraction substitute(const Polynomial& p, std::span<const Fraction> images);

}  // namespace reesmod
