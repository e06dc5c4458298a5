#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reesmod/modification.hpp"

namespace reesmod {

/// U_ij = (U_i)_g as seen from chart i, with the transition A_j -> (A_i)_g
/// given by the images of A_j's variables. Image denominators must divide a
/// power of g.
struct Overlap {
  std::size_t i = 0;
  std::size_t j = 0;
  Polynomial g;
  std::vector<Fraction> images;
};

/// Affine charts glued along localizations. Overlaps are keyed by the
/// ordered pair (i, j); a missing pair means the charts do not meet.
class ChartAtlas {
 public:
  explicit ChartAtlas(std::vector<PolyRing> charts);

  /// Throws std::invalid_argument on bad indices, i == j, or ring mismatches.
  void add_overlap(std::size_t i, std::size_t j, Polynomial g, std::vector<Fraction> images);

  const std::vector<PolyRing>& charts() const { return charts_; }
  std::size_t size() const { return charts_.size(); }
  const std::map<std::pair<std::size_t, std::size_t>, Overlap>& overlaps() const {
    return overlaps_;
  }
  const Overlap* overlap(std::size_t i, std::size_t j) const;

  /// phi_ij applied to an element of Frac(A_j), landing in Frac(A_i).
  Fraction transport(std::size_t i, std::size_t j, const Fraction& h) const;
  Fraction transport(std::size_t i, std::size_t j, const Polynomial& p) const;

 private:
  std::vector<PolyRing> charts_;
  std::map<std::pair<std::size_t, std::size_t>, Overlap> overlaps_;
};

/// One failed check. `charts` is the offending pair or triple.
struct Issue {
  std::string check;
  std::vector<std::size_t> charts;
  std::string witness;
};

struct ValidationReport {
  std::vector<Issue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

/// Missing reverse overlaps, zero g, denominators that are not g-powers,
/// phi_ij o phi_ji moving a variable, and the cocycle on triples.
ValidationReport validate_atlas(const ChartAtlas& atlas);

/// Local equations f_i, one per chart.
struct CartierDivisor {
  std::vector<Polynomial> local_equations;
};

/// Each f_i nonzero, and f_i / phi_ij(f_j) a unit of (A_i)_g on every overlap.
ValidationReport validate_divisor(const ChartAtlas& atlas, const CartierDivisor& d);

struct IdealSheaf {
  std::vector<Ideal> chart_ideals;
};

/// f_i in I_i, and generators of I_j transport into I_i : g_ij^inf.
ValidationReport validate_sheaf(const ChartAtlas& atlas, const CartierDivisor& d,
                                const IdealSheaf& sheaf);

enum class CheckStatus { Pass, Inconclusive };

/// Chart j's algebra generators a_k/f_j, moved to chart i, tested for
/// membership in (A_i)_g[I_i/f_i].
struct OverlapCheck {
  std::size_t i = 0;
  std::size_t j = 0;
  CheckStatus status = CheckStatus::Pass;
  /// Largest N needed over the generators that passed.
  unsigned max_n = 0;
  /// The first generator not found up to the bound.
  std::optional<std::string> witness;
};

struct GlobalModification {
  std::vector<ModificationRing> charts;
  /// Ordered by (i, j).
  std::vector<OverlapCheck> consistency;

  bool consistent() const;
  std::size_t inconclusive() const;
};

/// Thrown by modify_global when atlas, divisor or sheaf validation fails.
class ValidationFailed : public std::runtime_error {
 public:
  explicit ValidationFailed(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Chart-wise modification_ring((I_i, f_i)) plus the overlap consistency
/// checks in both directions.
GlobalModification modify_global(const ChartAtlas& atlas, const CartierDivisor& d,
                                 const IdealSheaf& sheaf,
                                 unsigned n_max = kDefaultMembershipBound);

/// modify_global with the unit ideal on every chart. Each chart's relations
/// are checked against <1 - T0, f_i T_last - 1>, a presentation of (A_i)_{f_i};
/// a mismatch throws std::logic_error.
GlobalModification complement_of_divisor(const ChartAtlas& atlas, const CartierDivisor& d,
                                         unsigned n_max = kDefaultMembershipBound);

}  // namespace reesmod
