#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <stop_token>
#include <vector>

#include "reesmod/polynomial.hpp"

namespace reesmod {

/// Thrown when a computation observes a stop request.
class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("computation cancelled") {}
};

/// Reduced Gröbner basis: monic, auto-reduced, sorted by leading monomial
/// ascending. For a fixed order this is a canonical form of the ideal.
class GroebnerBasis {
 public:
  /// `elements` must already be a reduced basis in canonical order; use
  /// buchberger() to obtain one.
  GroebnerBasis(PolyRing ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit_ideal() const { return elements_.size() == 1 && elements_.front().is_unit(); }

  bool operator==(const GroebnerBasis& o) const {
    return ring_ == o.ring_ && elements_ == o.elements_;
  }

 private:
  PolyRing ring_;
  std::vector<Polynomial> elements_;
};

struct BuchbergerOptions {
  /// Checked between S-pair reductions.
  std::stop_token stop;
};

/// Buchberger's algorithm with the coprime and chain (Gebauer-Möller)
/// criteria and the normal selection strategy (smallest lcm first, ties by
/// pair index). Over QQ reductions are fraction-free on content-free
/// polynomials. Zero generators are ignored; the empty input gives the
/// zero ideal.
GroebnerBasis buchberger(const PolyRing& ring, std::span<const Polynomial> gens,
                         const BuchbergerOptions& options = {});

/// Reduced basis together with cofactors expressing each basis element in
/// the input generators: basis[j] = sum_i cofactors[j][i] * gens[i].
struct LiftedBasis {
  GroebnerBasis basis;
  std::vector<std::vector<Polynomial>> cofactors;
};

LiftedBasis buchberger_with_cofactors(const PolyRing& ring, std::span<const Polynomial> gens,
                                      const BuchbergerOptions& options = {});

/// Coefficients c with p = sum c_i * gens[i], or nullopt when p is not in
/// the ideal. The division of p runs against the reduced basis in list
/// order, so the result is deterministic for a given generator list.
std::optional<std::vector<Polynomial>> express_in_generators(
    const Polynomial& p, std::span<const Polynomial> gens, const BuchbergerOptions& options = {});

/// The unique remainder of p modulo the ideal of G (exact arithmetic).
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

/// True iff both reduced bases are identical. Throws std::invalid_argument
/// when the orders differ, RingMismatch when the variables or fields differ.
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

/// S-polynomial of two polynomials in the same ring.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Every S-polynomial of basis pairs reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& g);

/// Monic, no term of any element divisible by another's leading monomial,
/// ascending leading monomials.
bool is_reduced(const GroebnerBasis& g);

/// Counters for the self-check buchberger() runs on every basis it returns
/// when built with REESMOD_VERIFY_GROEBNER.
struct GroebnerAudit {
  std::uint64_t verified = 0;
  std::uint64_t failed = 0;
  bool enabled = false;
};

GroebnerAudit groebner_audit();

}  // namespace reesmod
