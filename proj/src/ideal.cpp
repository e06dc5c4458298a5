#include "reesmod/ideal.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace reesmod {

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(PolyRing ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->basis.emplace(buchberger(ring_, gens_)); });
  return *cache_->basis;
}

bool Ideal::contains(const Polynomial& p) const {
  require_same_ring(ring_, p.ring());
  return normal_form(p, groebner()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::operator==(const Ideal& o) const { return ideal_equal(groebner(), o.groebner()); }

Ideal Ideal::canonical() const { return Ideal(ring_, groebner().elements()); }

std::string Ideal::to_string() const { return "ideal(" + reesmod::to_string(gens_) + ")"; }

RingMap::RingMap(PolyRing source, PolyRing target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.nvars()) {
    throw std::invalid_argument("ring map needs one image per source variable");
  }
  if (!(source_.field() == target_.field())) throw RingMismatch("ring map across fields");
  for (const auto& im : images_) require_same_ring(target_, im.ring());
}

Polynomial RingMap::operator()(const Polynomial& p) const {
  require_same_ring(source_, p.ring());
  std::vector<std::map<Exponent, Polynomial>> powers(images_.size());
  auto power = [&](std::size_t var, Exponent e) -> const Polynomial& {
    auto it = powers[var].find(e);
    if (it == powers[var].end()) it = powers[var].emplace(e, images_[var].pow(e)).first;
    return it->second;
  };
  Polynomial out(target_);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target_, t.coefficient);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (t.monomial[i] != 0) term = term * power(i, t.monomial[i]);
    }
    out += term;
  }
  return out;
}

std::string fresh_name(const PolyRing& ring, const std::string& stem) {
  std::string name = stem;
  for (int k = 0; ring.index_of(name); ++k) name = stem + std::to_string(k);
  return name;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> g;
  for (const auto& p : a.generators()) {
    for (const auto& q : b.generators()) g.push_back(p * q);
  }
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_power(const Ideal& a, unsigned n) {
  if (n == 0) return Ideal::unit(a.ring());
  Ideal cur = a;
  for (unsigned k = 1; k < n; ++k) cur = ideal_product(cur.canonical(), a);
  return cur;
}

namespace {

// Ring with `aux` prepended and an order eliminating it.
PolyRing with_front_variable(const PolyRing& ring, const std::string& aux) {
  return ring_extend(ring, {aux}, Position::Front, MonomialOrder::block(1));
}

// Generators of the GB of `gens` (in `big`, whose first k variables are
// eliminated) that avoid those variables, moved back into `target` through
// `back_map` (index in big -> index in target, for the kept variables).
std::vector<Polynomial> eliminate_block(const PolyRing& big, std::size_t k,
                                        const std::vector<Polynomial>& gens,
                                        const PolyRing& target,
                                        const std::vector<std::size_t>& back_map) {
  GroebnerBasis g = buchberger(big, gens);
  std::vector<Polynomial> out;
  for (const auto& p : g.elements()) {
    bool free = true;
    for (std::size_t v = 0; v < k && free; ++v) {
      if (p.degree_in(v) != 0) free = false;
    }
    if (free) out.push_back(change_ring(p, target, back_map));
  }
  return out;
}

std::vector<std::size_t> drop_front(std::size_t total, std::size_t k) {
  std::vector<std::size_t> m(total, 0);
  for (std::size_t i = k; i < total; ++i) m[i] = i - k;
  return m;
}

}  // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  PolyRing big = with_front_variable(a.ring(), fresh_name(a.ring(), "_w"));
  Polynomial w = Polynomial::variable(big, 0);
  Polynomial one_minus_w = Polynomial::constant(big, 1) - w;
  std::vector<Polynomial> gens;
  for (const auto& p : a.generators()) gens.push_back(w * embed(p, big, Position::Front));
  for (const auto& p : b.generators()) gens.push_back(one_minus_w * embed(p, big, Position::Front));
  return Ideal(a.ring(), eliminate_block(big, 1, gens, a.ring(), drop_front(big.nvars(), 1)));
}

Ideal ideal_quotient(const Ideal& a, const Polynomial& g) {
  require_same_ring(a.ring(), g.ring());
  if (g.is_zero()) throw std::invalid_argument("ideal quotient by the zero polynomial");
  Ideal meet = ideal_intersect(a, Ideal(a.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& p : meet.generators()) {
    auto q = exact_quotient(p, g);
    if (!q) throw std::logic_error("intersection element not divisible by the quotient element");
    gens.push_back(std::move(*q));
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) return Ideal::unit(a.ring());
  std::optional<Ideal> acc;
  for (const auto& g : b.generators()) {
    Ideal q = ideal_quotient(a, g);
    acc = acc ? ideal_intersect(*acc, q) : q;
  }
  return *acc;
}

Ideal ideal_saturation(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw std::invalid_argument("saturation by the zero ideal");
  Ideal cur = a.canonical();
  while (true) {
    Ideal next = ideal_quotient(cur, b).canonical();
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Ideal saturate_by_element(const Ideal& a, const Polynomial& g) {
  require_same_ring(a.ring(), g.ring());
  if (g.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  PolyRing big = with_front_variable(a.ring(), fresh_name(a.ring(), "_w"));
  std::vector<Polynomial> gens;
  for (const auto& p : a.generators()) gens.push_back(embed(p, big, Position::Front));
  gens.push_back(Polynomial::constant(big, 1) -
                 Polynomial::variable(big, 0) * embed(g, big, Position::Front));
  return Ideal(a.ring(), eliminate_block(big, 1, gens, a.ring(), drop_front(big.nvars(), 1)));
}

Ideal eliminate(const Ideal& a, std::span<const std::size_t> vars) {
  const PolyRing& ring = a.ring();
  std::vector<bool> elim(ring.nvars(), false);
  for (std::size_t v : vars) {
    if (v >= ring.nvars()) throw std::out_of_range("elimination variable out of range");
    elim[v] = true;
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (elim[i]) order.push_back(i);
  }
  std::size_t k = order.size();
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (!elim[i]) order.push_back(i);
  }
  std::vector<std::string> names;
  std::vector<std::size_t> to_big(ring.nvars());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    names.push_back(ring.names()[order[pos]]);
    to_big[order[pos]] = pos;
  }
  PolyRing big(names, ring.field(), MonomialOrder::block(k));
  std::vector<Polynomial> gens;
  for (const auto& p : a.generators()) gens.push_back(change_ring(p, big, to_big));
  return Ideal(ring, eliminate_block(big, k, gens, ring, order));
}

Ideal eliminate(const Ideal& a, const std::vector<std::string>& vars) {
  std::vector<std::size_t> idx;
  for (const auto& v : vars) {
    auto i = a.ring().index_of(v);
    if (!i) throw std::invalid_argument("unknown variable '" + v + "'");
    idx.push_back(*i);
  }
  return eliminate(a, idx);
}

Ideal restrict_to(const Ideal& a, const PolyRing& subring) {
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(map_by_name(g, subring));
  return Ideal(subring, std::move(gens));
}

Ideal kernel_of_map(const RingMap& phi) {
  const PolyRing& src = phi.source();
  const PolyRing& tgt = phi.target();
  std::size_t n = tgt.nvars();
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) {
    std::string name = "_t" + std::to_string(j);
    while (src.index_of(name)) name = "_" + name;
    names.push_back(name);
  }
  names.insert(names.end(), src.names().begin(), src.names().end());
  PolyRing big(names, src.field(), MonomialOrder::block(n));
  std::vector<std::size_t> tgt_map(n);
  std::iota(tgt_map.begin(), tgt_map.end(), 0);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    gens.push_back(Polynomial::variable(big, n + i) - change_ring(phi.images()[i], big, tgt_map));
  }
  return Ideal(src, eliminate_block(big, n, gens, src, drop_front(big.nvars(), n)));
}

RegularSequenceCheck is_regular_sequence(std::span<const Polynomial> elems) {
  if (elems.empty()) return {};
  const PolyRing& ring = elems.front().ring();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    require_same_ring(ring, elems[i].ring());
    Ideal prev(ring, std::vector<Polynomial>(elems.begin(), elems.begin() + i));
    if (elems[i].is_zero() || ideal_sum(prev, Ideal(ring, {elems[i]})).is_unit()) {
      return {false, i};
    }
    if (!(ideal_quotient(prev, elems[i]) == prev)) return {false, i};
  }
  return {};
}

Ideal denominator_ideal(const FractionalIdeal& j) {
  std::optional<Ideal> acc;
  for (const auto& fr : j.generators) {
    require_same_ring(j.ring, fr.ring());
    if (fr.is_zero()) continue;
    Polynomial p = fr.numerator().primitive();
    Polynomial q = fr.denominator().primitive();
    Ideal part = ideal_quotient(Ideal(j.ring, {q}), p);
    acc = acc ? ideal_intersect(*acc, part) : part;
  }
  if (!acc) return Ideal::unit(j.ring);
  return acc->canonical();
}

}  // namespace reesmod
