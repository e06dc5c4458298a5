#include "reesmod/modification.hpp"

#include <algorithm>
#include <set>

namespace reesmod {

namespace {

struct Arranged {
  std::vector<Polynomial> gens;
  std::vector<std::string> names;
};

std::string fresh_among(const PolyRing& base, const std::vector<std::string>& taken,
                        const std::string& stem) {
  std::set<std::string> used(taken.begin(), taken.end());
  used.insert(base.names().begin(), base.names().end());
  std::string name = stem;
  for (int k = 0; used.count(name); ++k) name = stem + std::to_string(k);
  return name;
}

// Listed generators with f moved to the front. When f is absent it is
// prepended only if `prepend` is set.
Arranged arrange(const ModificationCentre& c, std::vector<std::string> names, bool prepend) {
  Arranged a{c.ideal().generators(), std::move(names)};
  bool defaults = a.names.empty();
  if (!defaults && a.names.size() != a.gens.size()) {
    throw std::invalid_argument("expected " + std::to_string(a.gens.size()) +
                                " Rees variable names, got " + std::to_string(a.names.size()));
  }
  const Polynomial& f = c.divisor_element();
  auto it = std::find(a.gens.begin(), a.gens.end(), f);
  if (it != a.gens.end()) {
    auto pos = it - a.gens.begin();
    std::rotate(a.gens.begin(), it, it + 1);
    if (!defaults) std::rotate(a.names.begin(), a.names.begin() + pos, a.names.begin() + pos + 1);
  } else if (prepend) {
    a.gens.insert(a.gens.begin(), f);
    if (!defaults) a.names.insert(a.names.begin(), fresh_among(c.ring(), a.names, "S"));
  }
  if (defaults) a.names = default_rees_names(c.ring(), a.gens.size());
  return a;
}

Ideal with_generator(const Ideal& base, const Polynomial& extra) {
  std::vector<Polynomial> g = base.generators();
  g.push_back(extra);
  return Ideal(base.ring(), std::move(g));
}

}  // namespace

PolyRing rees_ring_for(const PolyRing& base, const std::vector<std::string>& names) {
  return ring_extend(base, names, Position::Back, MonomialOrder::grevlex());
}

std::vector<std::string> default_rees_names(const PolyRing& base, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back(fresh_among(base, names, "T" + std::to_string(i)));
  }
  return names;
}

Polynomial ReesPresentation::lift(const Polynomial& a) const {
  require_same_ring(base_ring, a.ring());
  return embed(a, rees_ring, Position::Back);
}

Polynomial ReesPresentation::rees_variable(std::size_t i) const {
  return Polynomial::variable(rees_ring, rees_index(i));
}

Ideal ReesPresentation::irrelevant_ideal() const {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < generators.size(); ++i) g.push_back(rees_variable(i));
  return Ideal(rees_ring, std::move(g));
}

Ideal ReesPresentation::extend(const Ideal& j) const {
  std::vector<Polynomial> g;
  for (const auto& p : j.generators()) g.push_back(lift(p));
  return Ideal(rees_ring, std::move(g));
}

ReesPresentation rees_presentation(const Ideal& ideal, std::vector<std::string> names) {
  const PolyRing& base = ideal.ring();
  const auto& gens = ideal.generators();
  if (gens.empty()) throw std::invalid_argument("Rees presentation needs at least one generator");
  if (names.empty()) names = default_rees_names(base, gens.size());
  if (names.size() != gens.size()) {
    throw std::invalid_argument("one Rees variable name per generator is required");
  }
  PolyRing rees_ring = rees_ring_for(base, names);
  PolyRing big = ring_extend(rees_ring, {fresh_name(rees_ring, "t")}, Position::Front,
                             MonomialOrder::block(1));
  Polynomial t = Polynomial::variable(big, 0);
  std::vector<Polynomial> graph;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Polynomial ti = Polynomial::variable(big, 1 + base.nvars() + i);
    graph.push_back(ti - t * map_by_name(gens[i], big));
  }
  std::vector<std::size_t> elim{0};
  Ideal k = restrict_to(eliminate(Ideal(big, graph), elim), rees_ring).canonical();
  return ReesPresentation{base, rees_ring, gens, names, k};
}

bool is_homogeneous_in(const Polynomial& p, std::span<const std::size_t> vars) {
  std::optional<std::uint64_t> deg;
  for (const auto& t : p.terms()) {
    std::uint64_t d = 0;
    for (std::size_t v : vars) d += t.monomial[v];
    if (deg && *deg != d) return false;
    deg = d;
  }
  return true;
}

ModificationCentre::ModificationCentre(Ideal ideal, Polynomial f)
    : ideal_(std::move(ideal)), f_(std::move(f)) {
  require_same_ring(ideal_.ring(), f_.ring());
  if (f_.is_zero()) throw InvalidCentre("the divisor element f must be nonzero");
  if (!ideal_.contains(f_)) {
    throw InvalidCentre("f = " + f_.to_string() + " is not in " + ideal_.to_string());
  }
}

ModificationRing modification_ring(const ModificationCentre& centre,
                                   std::vector<std::string> names) {
  Arranged a = arrange(centre, std::move(names), true);
  const PolyRing& base = centre.ring();
  ReesPresentation rees = rees_presentation(Ideal(base, a.gens), a.names);
  Polynomial one = Polynomial::constant(rees.rees_ring, 1);
  Ideal relations = with_generator(rees.kernel, one - rees.rees_variable(0)).canonical();

  Polynomial f = rees.lift(centre.divisor_element());
  std::vector<Polynomial> graph;
  for (std::size_t i = 0; i < a.gens.size(); ++i) {
    graph.push_back(f * rees.rees_variable(i) - rees.lift(a.gens[i]));
  }
  Ideal direct = saturate_by_element(Ideal(rees.rees_ring, graph), f).canonical();
  if (!(relations == direct)) {
    throw std::logic_error("Rees-quotient and direct-kernel presentations disagree");
  }
  std::vector<Fraction> images;
  for (const auto& g : a.gens) images.emplace_back(g, centre.divisor_element());
  return ModificationRing{centre, std::move(rees), std::move(relations), std::move(direct), 0,
                          std::move(images)};
}

bool relations_vanish(const ModificationRing& m) {
  const PolyRing& base = m.rees.base_ring;
  std::vector<Fraction> images;
  for (std::size_t i = 0; i < base.nvars(); ++i) {
    images.emplace_back(Polynomial::variable(base, i));
  }
  images.insert(images.end(), m.generator_images.begin(), m.generator_images.end());
  for (const auto& r : m.relations.generators()) {
    if (!substitute(r, images).is_zero()) return false;
  }
  return true;
}

ReesPresentation transform_presentation(const ModificationCentre& centre,
                                        std::vector<std::string> names) {
  Arranged a = arrange(centre, std::move(names), false);
  return rees_presentation(Ideal(centre.ring(), a.gens), a.names);
}

namespace {

Polynomial lift_polynomial(const ReesPresentation& rees, std::span<const Polynomial> coeffs) {
  Polynomial l(rees.rees_ring);
  for (std::size_t i = 0; i < coeffs.size(); ++i) l += rees.lift(coeffs[i]) * rees.rees_variable(i);
  return l;
}

}  // namespace

ProperTransform proper_transform(const ModificationCentre& centre, const ReesPresentation& rees) {
  const Polynomial& f = centre.divisor_element();
  const auto& gens = rees.generators;
  std::vector<Polynomial> coeffs;
  if (gens.front() == f) {
    coeffs.assign(gens.size(), Polynomial(centre.ring()));
    coeffs[0] = Polynomial::constant(centre.ring(), 1);
  } else {
    auto c = express_in_generators(f, gens);
    if (!c) throw InvalidCentre("f is not in the ideal generated by the Rees generators");
    coeffs = std::move(*c);
  }
  Polynomial lift = lift_polynomial(rees, coeffs);

  std::vector<Polynomial> reversed(gens.rbegin(), gens.rend());
  auto other = express_in_generators(f, reversed);
  if (!other) throw std::logic_error("second lift of f failed");
  std::reverse(other->begin(), other->end());
  if (!rees.kernel.contains(lift - lift_polynomial(rees, *other))) {
    throw std::logic_error("two lifts of f differ by a non-kernel element");
  }

  Ideal ideal = with_generator(rees.kernel, lift);
  Ideal saturated = ideal_saturation(ideal, rees.irrelevant_ideal());
  return ProperTransform{rees, std::move(coeffs), std::move(lift), std::move(ideal),
                         std::move(saturated)};
}

ProperTransform proper_transform(const ModificationCentre& centre,
                                 std::vector<std::string> names) {
  return proper_transform(centre, transform_presentation(centre, std::move(names)));
}

bool proper_transform_routes_agree(const ModificationCentre& centre) {
  ProperTransform p = proper_transform(centre);
  std::vector<Polynomial> gens = p.rees.generators;
  std::vector<std::string> names = p.rees.rees_variables;
  gens.insert(gens.begin(), centre.divisor_element());
  names.insert(names.begin(), fresh_among(centre.ring(), names, "S"));
  ReesPresentation wide = rees_presentation(Ideal(centre.ring(), gens), names);
  Ideal appended = with_generator(wide.kernel, wide.rees_variable(0));
  std::vector<Polynomial> moved = wide.kernel.generators();
  for (const auto& g : p.ideal.generators()) moved.push_back(map_by_name(g, wide.rees_ring));
  Ideal via_lift(wide.rees_ring, std::move(moved));
  Ideal irrelevant = wide.irrelevant_ideal();
  return ideal_saturation(appended, irrelevant) == ideal_saturation(via_lift, irrelevant);
}

StrictTransform strict_transform(const ModificationCentre& centre, const ReesPresentation& rees) {
  Ideal total = with_generator(rees.kernel, rees.lift(centre.divisor_element()));
  Ideal exceptional = rees.extend(Ideal(centre.ring(), rees.generators));
  Ideal ideal = ideal_saturation(total, exceptional);
  Ideal saturated = ideal_saturation(ideal, rees.irrelevant_ideal());
  return StrictTransform{rees, std::move(ideal), std::move(saturated)};
}

StrictTransform strict_transform(const ModificationCentre& centre,
                                 std::vector<std::string> names) {
  return strict_transform(centre, transform_presentation(centre, std::move(names)));
}

TransformPair transforms_equal(const ModificationCentre& centre, std::vector<std::string> names) {
  ReesPresentation rees = transform_presentation(centre, std::move(names));
  ProperTransform proper = proper_transform(centre, rees);
  StrictTransform strict = strict_transform(centre, rees);
  bool equal = proper.saturated == strict.saturated;
  return TransformPair{std::move(proper), std::move(strict), equal};
}

Ideal determinantal_ideal(const PolyRing& base, std::span<const Polynomial> seq,
                          std::vector<std::string> names) {
  if (names.empty()) names = default_rees_names(base, seq.size());
  if (names.size() != seq.size()) throw std::invalid_argument("one name per sequence element");
  PolyRing ring = rees_ring_for(base, names);
  std::vector<Polynomial> minors;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      Polynomial ai = embed(seq[i], ring, Position::Back);
      Polynomial aj = embed(seq[j], ring, Position::Back);
      minors.push_back(ai * Polynomial::variable(ring, base.nvars() + j) -
                       aj * Polynomial::variable(ring, base.nvars() + i));
    }
  }
  return Ideal(ring, std::move(minors));
}

Ideal exceptional_ideal(const ModificationCentre& centre, std::vector<std::string> names) {
  ReesPresentation rees = transform_presentation(centre, std::move(names));
  return ideal_sum(rees.kernel, rees.extend(Ideal(centre.ring(), rees.generators)));
}

Ideal dehomogenize(const Ideal& j, const ReesPresentation& rees, std::size_t chart) {
  if (chart >= rees.generators.size()) throw std::out_of_range("chart index out of range");
  const PolyRing& src = rees.rees_ring;
  std::size_t drop = rees.rees_index(chart);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    if (i != drop) names.push_back(src.names()[i]);
  }
  PolyRing target(names, src.field(), MonomialOrder::grevlex());
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    images.push_back(i == drop ? Polynomial::constant(target, 1)
                               : Polynomial::variable(target, src.names()[i]));
  }
  RingMap phi(src, target, std::move(images));
  std::vector<Polynomial> gens;
  for (const auto& g : j.generators()) gens.push_back(phi(g));
  return Ideal(target, std::move(gens));
}

Membership membership_in_modification(const ModificationCentre& centre, const Polynomial& p,
                                      unsigned k, unsigned n_max) {
  require_same_ring(centre.ring(), p.ring());
  if (n_max < k) throw std::invalid_argument("membership bound is smaller than the exponent k");
  const Polynomial& f = centre.divisor_element();
  Ideal power = ideal_power(centre.ideal(), k);
  Polynomial candidate = p;
  for (unsigned n = k; n <= n_max; ++n) {
    if (power.contains(candidate)) return {true, n};
    if (n == n_max) break;
    candidate *= f;
    power = ideal_product(power.canonical(), centre.ideal());
  }
  return {false, n_max};
}

Membership membership_in_localized_modification(const ModificationCentre& centre,
                                                const Fraction& h, const Polynomial& g,
                                                unsigned n_max) {
  require_same_ring(centre.ring(), h.ring());
  require_same_ring(centre.ring(), g.ring());
  const Polynomial& f = centre.divisor_element();
  Ideal power = Ideal::unit(centre.ring());
  Polynomial candidate = h.numerator();
  Ideal den(centre.ring(), {h.denominator()});
  for (unsigned n = 0; n <= n_max; ++n) {
    Ideal target = ideal_product(den, power);
    if (!g.is_constant()) target = saturate_by_element(target, g);
    if (target.contains(candidate)) return {true, n};
    if (n == n_max) break;
    candidate *= f;
    power = ideal_product(power.canonical(), centre.ideal());
  }
  return {false, n_max};
}

ModificationCentre centre_from_fractional(const FractionalIdeal& j, const Polynomial& f) {
  require_same_ring(j.ring, f.ring());
  if (f.is_zero()) throw InvalidCentre("the common denominator must be nonzero");
  std::vector<Polynomial> cleared;
  for (const auto& fr : j.generators) {
    auto q = exact_quotient(fr.numerator() * f, fr.denominator());
    if (!q) {
      throw InvalidCentre(f.to_string() + " is not a denominator of " + fr.to_string());
    }
    cleared.push_back(std::move(*q));
  }
  std::vector<Polynomial> kept{f};
  for (const auto& c : cleared) {
    if (c.is_zero()) continue;
    if (!Ideal(j.ring, kept).contains(c)) kept.push_back(c);
  }
  ModificationCentre centre(Ideal(j.ring, kept), f);
  for (std::size_t i = 0; i < cleared.size(); ++i) {
    if (!(Fraction(cleared[i], f) == j.generators[i]) ||
        !membership_in_modification(centre, cleared[i], 1, 1).member) {
      throw std::logic_error("fractional generator missing from the extracted modification");
    }
  }
  return centre;
}

}  // namespace reesmod
