#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace reesmod {

using Exponent = std::uint32_t;

/// Raised when a monomial product would not fit in an Exponent.
class ExponentOverflow : public std::overflow_error {
 public:
  ExponentOverflow() : std::overflow_error("monomial exponent overflow") {}
};

/// Dense exponent vector. The number of entries equals the number of
/// variables of the owning ring.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 8>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> e) : exps_(e) {}
  explicit Monomial(const std::vector<Exponent>& e) : exps_(e.begin(), e.end()) {}

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const Exponent* begin() const { return exps_.data(); }
  const Exponent* end() const { return exps_.data() + exps_.size(); }

  std::uint64_t degree() const;
  bool is_one() const;

  /// True when this divides `other`.
  bool divides(const Monomial& other) const;
  /// True when the supports are disjoint.
  bool coprime(const Monomial& other) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  /// `this / other`; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

 private:
  Storage exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// A monomial order on exponent vectors of a fixed length.
///
/// lex: x1 > x2 > ... compared lexicographically.
/// grevlex: total degree, ties broken by the smaller exponent in the last
///   differing variable winning.
/// block(k): grevlex on the first k variables, then grevlex on the rest; the
///   first k variables form the elimination block.
/// weighted(w): w-degree first, grevlex tiebreak. Weights are nonnegative.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block, Weighted };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0, {}); }
  static MonomialOrder block(std::size_t eliminated) {
    return MonomialOrder(Kind::Block, eliminated, {});
  }
  static MonomialOrder weighted(std::vector<std::uint64_t> weights) {
    return MonomialOrder(Kind::Weighted, 0, std::move(weights));
  }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }
  const std::vector<std::uint64_t>& weights() const { return weights_; }

  /// Throws std::invalid_argument when the order cannot act on `nvars` variables.
  void check_arity(std::size_t nvars) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Textual form used by the script language: lex, grevlex, block(k), weighted(a,b,..).
  std::string to_string() const;
  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind k, std::size_t block, std::vector<std::uint64_t> w)
      : kind_(k), block_(block), weights_(std::move(w)) {}

  Kind kind_;
  std::size_t block_;
  std::vector<std::uint64_t> weights_;
};

}  // namespace reesmod
