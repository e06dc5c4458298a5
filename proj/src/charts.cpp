#include "reesmod/charts.hpp"

#include <sstream>

namespace reesmod {

namespace {

std::string pair_label(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + ")";
}

// d divides g^deg(d) exactly when d divides some power of g.
bool divides_power_of(const Polynomial& d, const Polynomial& g) {
  if (d.is_constant()) return true;
  return exact_quotient(g.pow(static_cast<unsigned>(d.total_degree())), d).has_value();
}

// P/Q is a unit of A_g: each of P, Q lies in the saturation of the other.
bool is_local_unit(const Fraction& r, const Polynomial& g) {
  if (r.is_zero()) return false;
  const PolyRing& ring = r.ring();
  Ideal by_den = saturate_by_element(Ideal(ring, {r.denominator()}), g);
  Ideal by_num = saturate_by_element(Ideal(ring, {r.numerator()}), g);
  return by_den.contains(r.numerator()) && by_num.contains(r.denominator());
}

}  // namespace

ChartAtlas::ChartAtlas(std::vector<PolyRing> charts) : charts_(std::move(charts)) {}

void ChartAtlas::add_overlap(std::size_t i, std::size_t j, Polynomial g,
                             std::vector<Fraction> images) {
  if (i >= charts_.size() || j >= charts_.size()) {
    throw std::invalid_argument("overlap " + pair_label({i, j}) + " names a missing chart");
  }
  if (i == j) throw std::invalid_argument("overlap of a chart with itself is the identity");
  require_same_ring(charts_[i], g.ring());
  if (images.size() != charts_[j].nvars()) {
    throw std::invalid_argument("overlap " + pair_label({i, j}) + " needs " +
                                std::to_string(charts_[j].nvars()) + " images");
  }
  for (const auto& im : images) require_same_ring(charts_[i], im.ring());
  overlaps_.insert_or_assign({i, j}, Overlap{i, j, std::move(g), std::move(images)});
}

const Overlap* ChartAtlas::overlap(std::size_t i, std::size_t j) const {
  auto it = overlaps_.find({i, j});
  return it == overlaps_.end() ? nullptr : &it->second;
}

Fraction ChartAtlas::transport(std::size_t i, std::size_t j, const Polynomial& p) const {
  require_same_ring(charts_.at(j), p.ring());
  if (i == j) return Fraction(p);
  const Overlap* o = overlap(i, j);
  if (!o) throw std::invalid_argument("charts " + pair_label({i, j}) + " do not overlap");
  return substitute(p, o->images);
}

Fraction ChartAtlas::transport(std::size_t i, std::size_t j, const Fraction& h) const {
  return transport(i, j, h.numerator()) / transport(i, j, h.denominator());
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& is : issues) {
    out << is.check << " at " << pair_label(is.charts) << ": " << is.witness << "\n";
  }
  return out.str();
}

ValidationReport validate_atlas(const ChartAtlas& atlas) {
  ValidationReport report;
  auto fail = [&](std::string check, std::vector<std::size_t> idx, std::string witness) {
    report.issues.push_back({std::move(check), std::move(idx), std::move(witness)});
  };
  for (const auto& [key, o] : atlas.overlaps()) {
    if (!atlas.overlap(o.j, o.i)) fail("missing reverse overlap", {o.i, o.j}, "no map back");
    if (o.g.is_zero()) {
      fail("zero localization element", {o.i, o.j}, "g = 0");
      continue;
    }
    const auto& names = atlas.charts()[o.j].names();
    for (std::size_t v = 0; v < o.images.size(); ++v) {
      if (!divides_power_of(o.images[v].denominator(), o.g)) {
        fail("denominator not a power of g", {o.i, o.j},
             names[v] + " -> " + o.images[v].to_string() + " with g = " + o.g.to_string());
      }
    }
  }
  if (!report.ok()) return report;

  for (const auto& [key, o] : atlas.overlaps()) {
    const PolyRing& ring = atlas.charts()[o.i];
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      Polynomial x = Polynomial::variable(ring, v);
      try {
        Fraction back = atlas.transport(o.i, o.j, atlas.transport(o.j, o.i, x));
        if (!(back == Fraction(x))) {
          fail("round trip moves a variable", {o.i, o.j},
               ring.names()[v] + " -> " + back.to_string());
        }
      } catch (const std::domain_error& e) {
        fail("round trip undefined", {o.i, o.j}, ring.names()[v] + ": " + e.what());
      }
    }
  }
  std::size_t n = atlas.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (!atlas.overlap(i, j) || !atlas.overlap(j, k) || !atlas.overlap(i, k)) continue;
        const PolyRing& ring = atlas.charts()[k];
        for (std::size_t v = 0; v < ring.nvars(); ++v) {
          Polynomial x = Polynomial::variable(ring, v);
          try {
            Fraction two = atlas.transport(i, j, atlas.transport(j, k, x));
            Fraction one = atlas.transport(i, k, x);
            if (!(two == one)) {
              fail("cocycle", {i, j, k},
                   ring.names()[v] + ": " + two.to_string() + " vs " + one.to_string());
            }
          } catch (const std::domain_error& e) {
            fail("cocycle undefined", {i, j, k}, ring.names()[v] + ": " + e.what());
          }
        }
      }
    }
  }
  return report;
}

ValidationReport validate_divisor(const ChartAtlas& atlas, const CartierDivisor& d) {
  ValidationReport report;
  if (d.local_equations.size() != atlas.size()) {
    report.issues.push_back({"divisor arity", {}, "expected " + std::to_string(atlas.size()) +
                                                      " local equations"});
    return report;
  }
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    require_same_ring(atlas.charts()[i], d.local_equations[i].ring());
    if (d.local_equations[i].is_zero()) {
      report.issues.push_back({"zero local equation", {i}, "f = 0"});
    }
  }
  if (!report.ok()) return report;
  for (const auto& [key, o] : atlas.overlaps()) {
    Fraction ratio = Fraction(d.local_equations[o.i]) / atlas.transport(o.i, o.j, d.local_equations[o.j]);
    if (!is_local_unit(ratio, o.g)) {
      report.issues.push_back({"ratio not a unit", {o.i, o.j},
                               ratio.to_string() + " on the localization at " + o.g.to_string()});
    }
  }
  return report;
}

ValidationReport validate_sheaf(const ChartAtlas& atlas, const CartierDivisor& d,
                                const IdealSheaf& sheaf) {
  ValidationReport report;
  if (sheaf.chart_ideals.size() != atlas.size()) {
    report.issues.push_back({"sheaf arity", {}, "expected " + std::to_string(atlas.size()) +
                                                    " chart ideals"});
    return report;
  }
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    require_same_ring(atlas.charts()[i], sheaf.chart_ideals[i].ring());
    if (i < d.local_equations.size() && !sheaf.chart_ideals[i].contains(d.local_equations[i])) {
      report.issues.push_back({"local equation outside the ideal", {i},
                               d.local_equations[i].to_string()});
    }
  }
  for (const auto& [key, o] : atlas.overlaps()) {
    Ideal local = saturate_by_element(sheaf.chart_ideals[o.i], o.g);
    for (const auto& q : sheaf.chart_ideals[o.j].generators()) {
      Fraction moved = atlas.transport(o.i, o.j, q);
      if (!local.contains(moved.numerator())) {
        report.issues.push_back({"generator does not transport", {o.i, o.j},
                                 q.to_string() + " -> " + moved.to_string()});
      }
    }
  }
  return report;
}

bool GlobalModification::consistent() const {
  for (const auto& c : consistency) {
    if (c.status != CheckStatus::Pass) return false;
  }
  return true;
}

std::size_t GlobalModification::inconclusive() const {
  std::size_t n = 0;
  for (const auto& c : consistency) n += c.status == CheckStatus::Inconclusive;
  return n;
}

ValidationFailed::ValidationFailed(ValidationReport report)
    : std::runtime_error("validation failed:\n" + report.to_string()), report_(std::move(report)) {}

GlobalModification modify_global(const ChartAtlas& atlas, const CartierDivisor& d,
                                 const IdealSheaf& sheaf, unsigned n_max) {
  ValidationReport all = validate_atlas(atlas);
  if (all.ok()) all = validate_divisor(atlas, d);
  if (all.ok()) all = validate_sheaf(atlas, d, sheaf);
  if (!all.ok()) throw ValidationFailed(std::move(all));

  GlobalModification out;
  std::vector<ModificationCentre> centres;
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    centres.emplace_back(sheaf.chart_ideals[i], d.local_equations[i]);
    out.charts.push_back(modification_ring(centres.back()));
  }
  for (const auto& [key, o] : atlas.overlaps()) {
    OverlapCheck check;
    check.i = o.i;
    check.j = o.j;
    for (const auto& image : out.charts[o.j].generator_images) {
      Fraction moved = atlas.transport(o.i, o.j, image);
      Membership m = membership_in_localized_modification(centres[o.i], moved, o.g, n_max);
      if (!m.member) {
        check.status = CheckStatus::Inconclusive;
        check.witness = image.to_string() + " -> " + moved.to_string();
        break;
      }
      check.max_n = std::max(check.max_n, m.n);
    }
    out.consistency.push_back(std::move(check));
  }
  return out;
}

GlobalModification complement_of_divisor(const ChartAtlas& atlas, const CartierDivisor& d,
                                         unsigned n_max) {
  IdealSheaf unit;
  for (const auto& ring : atlas.charts()) unit.chart_ideals.push_back(Ideal::unit(ring));
  GlobalModification out = modify_global(atlas, d, unit, n_max);
  for (std::size_t i = 0; i < out.charts.size(); ++i) {
    const ReesPresentation& rees = out.charts[i].rees;
    Polynomial one = Polynomial::constant(rees.rees_ring, 1);
    Polynomial last = rees.rees_variable(rees.generators.size() - 1);
    Ideal expected(rees.rees_ring, {one - rees.rees_variable(0),
                                    rees.lift(d.local_equations[i]) * last - one});
    if (!(expected == out.charts[i].relations)) {
      throw std::logic_error("chart " + std::to_string(i) +
                             " is not presented as a localization at its local equation");
    }
  }
  return out;
}

}  // namespace reesmod
