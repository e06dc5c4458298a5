#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reesmod/fraction.hpp"
#include "reesmod/groebner.hpp"
#include "reesmod/polynomial.hpp"

namespace reesmod {

/// Ideal given by an ordered generator list. The reduced Gröbner basis is
/// computed on first use and shared between copies.
class Ideal {
 public:
  /// Zero generators are dropped.
  Ideal(PolyRing ring, std::vector<Polynomial> generators);

  static Ideal zero(PolyRing ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(PolyRing ring);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const GroebnerBasis& groebner() const;

  bool contains(const Polynomial& p) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const { return groebner().is_unit_ideal(); }
  bool is_zero() const { return gens_.empty(); }

  /// Same ideal (reduced bases agree). Rings must match.
  bool operator==(const Ideal& o) const;

  /// The ideal generated by its reduced Gröbner basis.
  Ideal canonical() const;

  /// `ideal(g1, g2, ...)` over the stored generators.
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> basis;
  };
  PolyRing ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// A-submodule of Frac(A) generated by num_i/den_i (A a polynomial ring,
/// hence a domain).
struct FractionalIdeal {
  PolyRing ring;
  std::vector<Fraction> generators;
};

/// Algebra map source -> target sending variable i of source to images[i].
class RingMap {
 public:
  RingMap(PolyRing source, PolyRing target, std::vector<Polynomial> images);

  const PolyRing& source() const { return source_; }
  const PolyRing& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial operator()(const Polynomial& p) const;

 private:
  PolyRing source_;
  PolyRing target_;
  std::vector<Polynomial> images_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// I^0 = <1>. Generators of each power are kept small by taking the reduced
/// basis of the previous power.
Ideal ideal_power(const Ideal& a, unsigned n);

/// I ∩ J by eliminating w from <w*I, (1-w)*J>.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/// (I : g) = {h : h*g in I}; g must be nonzero.
Ideal ideal_quotient(const Ideal& a, const Polynomial& g);
/// (I : J) as the intersection of (I : g) over the generators of J.
Ideal ideal_quotient(const Ideal& a, const Ideal& b);

/// (I : J^inf) by iterating quotients until the reduced basis stabilizes.
/// Throws std::invalid_argument when J is the zero ideal.
Ideal ideal_saturation(const Ideal& a, const Ideal& b);

/// (I : g^inf) by a single elimination: <I, 1 - w*g> ∩ A.
Ideal saturate_by_element(const Ideal& a, const Polynomial& g);

/// I ∩ k[remaining variables], returned in I's ring.
Ideal eliminate(const Ideal& a, std::span<const std::size_t> vars);
Ideal eliminate(const Ideal& a, const std::vector<std::string>& vars);

/// Restricts an ideal whose generators avoid the variables missing from
/// `subring` into that ring (matching variables by name).
Ideal restrict_to(const Ideal& a, const PolyRing& subring);

/// Kernel of the map from its graph ideal <X_i - phi(X_i)> with the target
/// variables eliminated.
Ideal kernel_of_map(const RingMap& phi);

struct RegularSequenceCheck {
  bool regular = true;
  /// First index where the sequence stops being regular.
  std::optional<std::size_t> failing_index;
};

/// Each a_i is a nonzerodivisor and a non-unit modulo <a_0..a_{i-1}>.
RegularSequenceCheck is_regular_sequence(std::span<const Polynomial> elems);

/// F = {f : f*J ⊂ A} = ∩ ((q_i) : p_i) over generators p_i/q_i.
Ideal denominator_ideal(const FractionalIdeal& j);

/// A variable name not present in `ring`, derived from `stem`.
std::string fresh_name(const PolyRing& ring, const std::string& stem);

}  // namespace reesmod
