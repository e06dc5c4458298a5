#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "reesmod/fraction.hpp"
#include "reesmod/ideal.hpp"

namespace reesmod {

/// A centre (I, f) that fails f != 0 or f in I, or a fractional ideal whose
/// proposed denominator does not clear it.
class InvalidCentre : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Presentation of the Rees algebra A[It] as A[T_0..T_r]/kernel, where
/// T_i maps to a_i*t. The presentation ring lists A's variables first and
/// then the T_i, under grevlex.
struct ReesPresentation {
  PolyRing base_ring;
  PolyRing rees_ring;
  std::vector<Polynomial> generators;
  std::vector<std::string> rees_variables;
  Ideal kernel;

  /// A -> A[T].
  Polynomial lift(const Polynomial& a) const;
  /// T_i as an element of A[T].
  Polynomial rees_variable(std::size_t i) const;
  std::size_t rees_index(std::size_t i) const { return base_ring.nvars() + i; }
  /// <T_0, ..., T_r>.
  Ideal irrelevant_ideal() const;
  /// J * A[T] for an ideal J of A.
  Ideal extend(const Ideal& j) const;
};

/// The ring A[T_0..T_r] used by rees_presentation and determinantal_ideal.
PolyRing rees_ring_for(const PolyRing& base, const std::vector<std::string>& names);

/// Default Rees variable names T0..Tr, renamed away from the base variables.
std::vector<std::string> default_rees_names(const PolyRing& base, std::size_t count);

/// Kernel of A[T] -> A[t], T_i -> a_i t, by eliminating t from <T_i - a_i t>.
/// `names` defaults to T0..Tr. Throws std::invalid_argument on an empty
/// generator list.
ReesPresentation rees_presentation(const Ideal& ideal, std::vector<std::string> names = {});

/// True when every term of p has the same total degree in `vars`.
bool is_homogeneous_in(const Polynomial& p, std::span<const std::size_t> vars);

/// The pair (I, f): f nonzero and f in I. In a domain "regular" means nonzero.
class ModificationCentre {
 public:
  ModificationCentre(Ideal ideal, Polynomial f);

  const Ideal& ideal() const { return ideal_; }
  const Polynomial& divisor_element() const { return f_; }
  const PolyRing& ring() const { return ideal_.ring(); }

 private:
  Ideal ideal_;
  Polynomial f_;
};

/// Presentation of A[I/f] as A[T_0..T_r]/relations with a_0 = f.
struct ModificationRing {
  ModificationCentre centre;
  ReesPresentation rees;
  /// Rees kernel + <1 - T_0>.
  Ideal relations;
  /// Kernel of A[T] -> Frac(A), T_i -> a_i/f, computed as <f T_i - a_i> : f^inf.
  Ideal direct_relations;
  std::size_t distinguished_index = 0;
  /// a_i / f.
  std::vector<Fraction> generator_images;
};

/// Builds A[I/f] in both presentations (Rees quotient by 1 - f t, direct
/// kernel) and throws std::logic_error if they disagree. f is moved to index
/// 0 of the generator list, or prepended when it is not listed. `names`
/// name the listed generators; a prepended f gets a fresh name.
ModificationRing modification_ring(const ModificationCentre& centre,
                                   std::vector<std::string> names = {});

/// Every relation vanishes after T_i -> a_i/f.
bool relations_vanish(const ModificationRing& m);

struct ProperTransform {
  ReesPresentation rees;
  /// c_i with f = sum c_i a_i.
  std::vector<Polynomial> lift_coefficients;
  /// sum c_i T_i.
  Polynomial lift;
  /// kernel + <lift>.
  Ideal ideal;
  /// ideal : <T_0..T_r>^inf.
  Ideal saturated;
};

struct StrictTransform {
  ReesPresentation rees;
  /// (kernel + <f>) : (I A[T])^inf.
  Ideal ideal;
  Ideal saturated;
};

struct TransformPair {
  ProperTransform proper;
  StrictTransform strict;
  bool equal_as_subschemes = false;
};

/// Rees presentation used for transforms: the listed generators, with f
/// moved to index 0 when it is one of them (names follow their generators).
ReesPresentation transform_presentation(const ModificationCentre& centre,
                                        std::vector<std::string> names = {});

/// Proper transform of div(f). The lift is f = sum c_i a_i from division
/// against the reduced basis of I with tracked cofactors (T_0 when a_0 = f).
/// A second lift from the reversed generator list is checked to differ by a
/// kernel element.
ProperTransform proper_transform(const ModificationCentre& centre,
                                 std::vector<std::string> names = {});
ProperTransform proper_transform(const ModificationCentre& centre, const ReesPresentation& rees);

/// Cross-check of the proper transform against the presentation with f
/// prepended as an extra generator S: both define the same subscheme of Proj
/// once compared in A[S, T] after irrelevant saturation.
bool proper_transform_routes_agree(const ModificationCentre& centre);

StrictTransform strict_transform(const ModificationCentre& centre,
                                 std::vector<std::string> names = {});
StrictTransform strict_transform(const ModificationCentre& centre, const ReesPresentation& rees);

/// Both transforms in one presentation, compared after saturating by the
/// irrelevant ideal.
TransformPair transforms_equal(const ModificationCentre& centre,
                               std::vector<std::string> names = {});

/// 2x2 minors a_i T_j - a_j T_i (i < j) of the matrix with rows (a) and (T).
Ideal determinantal_ideal(const PolyRing& base, std::span<const Polynomial> seq,
                          std::vector<std::string> names = {});

/// kernel + I A[T], the exceptional locus of the blowup.
Ideal exceptional_ideal(const ModificationCentre& centre, std::vector<std::string> names = {});

/// Sets T_chart = 1; the result lives in A[T without T_chart].
Ideal dehomogenize(const Ideal& j, const ReesPresentation& rees, std::size_t chart);

/// Outcome of the bounded membership search. `member` is false when no N up
/// to the bound worked: the search is a semi-decision procedure, so this
/// means "not found up to n", not "not a member".
struct Membership {
  bool member = false;
  unsigned n = 0;
};

inline constexpr unsigned kDefaultMembershipBound = 20;

/// Is p/f^k in A[I/f]? Searches N = k..n_max for p f^(N-k) in I^N.
/// Throws std::invalid_argument when n_max < k.
Membership membership_in_modification(const ModificationCentre& centre, const Polynomial& p,
                                      unsigned k, unsigned n_max = kDefaultMembershipBound);

/// Is h in (A_g)[I/f]? Searches N = 0..n_max for P f^N in (Q I^N) : g^inf
/// where h = P/Q. A constant g means no localization.
Membership membership_in_localized_modification(const ModificationCentre& centre,
                                                const Fraction& h, const Polynomial& g,
                                                unsigned n_max = kDefaultMembershipBound);

/// Centre (<f> + fJ, f) for a fractional ideal J with denominator f.
/// Generators already in the ideal of earlier ones are dropped.
ModificationCentre centre_from_fractional(const FractionalIdeal& j, const Polynomial& f);

}  // namespace reesmod
