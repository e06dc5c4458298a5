#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "reesmod/coefficient.hpp"
#include "reesmod/monomial.hpp"

namespace reesmod {

/// Raised by any binary operation whose operands live in different rings.
class RingMismatch : public std::invalid_argument {
 public:
  explicit RingMismatch(const std::string& what = "polynomials belong to different rings")
      : std::invalid_argument(what) {}
};

/// k[x1..xn] with a fixed monomial order. Copies share one immutable
/// description; two rings are equal when names, field and order agree.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, Field field,
           MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& names() const { return d_->names; }
  std::size_t nvars() const { return d_->names.size(); }
  const Field& field() const { return d_->field; }
  const MonomialOrder& order() const { return d_->order; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Same variables and field, different order.
  PolyRing with_order(MonomialOrder order) const;
  /// Same variables and order, different field.
  PolyRing with_field(Field field) const;

  /// `QQ[x,y]`, followed by ` with order lex` for non-default orders.
  std::string to_string() const;

  bool operator==(const PolyRing& o) const;

 private:
  struct Data {
    std::vector<std::string> names;
    Field field;
    MonomialOrder order;
  };
  std::shared_ptr<const Data> d_;
};

enum class Position { Front, Back };

/// Adjoins `new_vars` at the front or back. Throws std::invalid_argument on a
/// name collision.
PolyRing ring_extend(const PolyRing& ring, const std::vector<std::string>& new_vars,
                     Position position, MonomialOrder new_order);

struct Term {
  Monomial monomial;
  Coefficient coefficient;
};

/// Sparse polynomial: nonzero terms strictly descending in the ring's order.
class Polynomial {
 public:
  explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}

  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(PolyRing ring, std::vector<Term> terms);
  static Polynomial constant(PolyRing ring, const Coefficient& c);
  static Polynomial constant(PolyRing ring, long c);
  static Polynomial variable(PolyRing ring, std::size_t index);
  static Polynomial variable(PolyRing ring, const std::string& name);
  static Polynomial monomial(PolyRing ring, Monomial m, const Coefficient& c);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Nonzero constant.
  bool is_unit() const { return is_constant() && !is_zero(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Coefficient& leading_coefficient() const { return terms_.front().coefficient; }

  std::uint64_t total_degree() const;
  Exponent degree_in(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Coefficient& c) const;
  Polynomial times_monomial(const Monomial& m, const Coefficient& c) const;
  /// `*this + c * m * g` computed by a single merge.
  Polynomial add_scaled(const Coefficient& c, const Monomial& m, const Polynomial& g) const;
  Polynomial pow(unsigned n) const;
  /// Removes the leading term in place (no-op on zero).
  void drop_leading_term();

  /// Leading coefficient 1 (zero stays zero).
  Polynomial monic() const;
  /// Over QQ: integer coefficients with gcd 1 and positive leading
  /// coefficient. Over GF(p): monic. The factor applied is returned in `scale`.
  Polynomial primitive(Coefficient* scale = nullptr) const;

  bool operator==(const Polynomial& o) const;

  /// Canonical rendering: descending terms, `a/b` coefficients, `x^2*y`.
  std::string to_string() const;

 private:
  PolyRing ring_;
  std::vector<Term> terms_;
};

/// Throws RingMismatch unless the rings are equal.
void require_same_ring(const PolyRing& a, const PolyRing& b);

/// Moves `p` into `target`: variable i of p's ring becomes variable
/// var_map[i] of target. Coefficients are converted into the target field.
Polynomial change_ring(const Polynomial& p, const PolyRing& target,
                       std::span<const std::size_t> var_map);

/// Embeds p into a ring produced by ring_extend(p.ring(), ..., position, ...).
Polynomial embed(const Polynomial& p, const PolyRing& extended, Position position);

/// Maps each variable of p's ring to the variable with the same name in target.
Polynomial map_by_name(const Polynomial& p, const PolyRing& target);

/// Exact division p / d when d divides p in the polynomial ring.
std::optional<Polynomial> exact_quotient(const Polynomial& p, const Polynomial& d);

std::string to_string(std::span<const Polynomial> polys);

}  // namespace reesmod
