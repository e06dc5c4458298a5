#include "reesmod/groebner.hpp"

#include <algorithm>
#include <atomic>

#include "reesmod/division.hpp"

namespace reesmod {

namespace {

std::atomic<std::uint64_t> g_verified{0};
std::atomic<std::uint64_t> g_failed{0};

struct Element {
  Polynomial poly;
  std::vector<Polynomial> cof;
  bool active = true;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(const PolyRing& ring, bool track, std::size_t ngens, const BuchbergerOptions& options)
      : ring_(ring), track_(track), ngens_(ngens), options_(options) {}

  void run(std::span<const Polynomial> gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      require_same_ring(ring_, gens[i].ring());
      if (gens[i].is_zero()) continue;
      Element e{gens[i], {}, true};
      if (track_) {
        e.cof.assign(ngens_, Polynomial(ring_));
        e.cof[i] = Polynomial::constant(ring_, ring_.field().one());
      }
      normalize(e);
      if (add(std::move(e))) return;
    }
    while (!pairs_.empty()) {
      if (options_.stop.stop_requested()) throw Cancelled();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        auto c = ring_.order().compare(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && std::tie(pairs_[k].i, pairs_[k].j) <
                                    std::tie(pairs_[best].i, pairs_[best].j))) {
          best = k;
        }
      }
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Element s = spoly(p.i, p.j);
      reduce(s, active_indices(), true);
      if (s.poly.is_zero()) continue;
      normalize(s);
      if (add(std::move(s))) return;
    }
  }

  LiftedBasis finish() {
    std::vector<std::size_t> kept;
    if (unit_) {
      kept.push_back(*unit_);
    } else {
      auto act = active_indices();
      for (std::size_t i : act) {
        const Monomial& mi = basis_[i].poly.leading_monomial();
        bool redundant = false;
        for (std::size_t j : act) {
          if (j == i) continue;
          const Monomial& mj = basis_[j].poly.leading_monomial();
          if (mj.divides(mi) && (!(mj == mi) || j < i)) {
            redundant = true;
            break;
          }
        }
        if (!redundant) kept.push_back(i);
      }
    }
    std::vector<Element> out;
    for (std::size_t i : kept) {
      std::vector<std::size_t> others;
      for (std::size_t j : kept) {
        if (j != i) others.push_back(j);
      }
      Element e = basis_[i];
      reduce(e, others, true);
      Coefficient inv = e.poly.leading_coefficient().inverse();
      e.poly = e.poly.scaled(inv);
      for (auto& c : e.cof) c = c.scaled(inv);
      out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [&](const Element& a, const Element& b) {
      return ring_.order().less(a.poly.leading_monomial(), b.poly.leading_monomial());
    });
    LiftedBasis lb{GroebnerBasis(ring_, {}), {}};
    std::vector<Polynomial> elems;
    for (auto& e : out) {
      elems.push_back(std::move(e.poly));
      lb.cofactors.push_back(std::move(e.cof));
    }
    lb.basis = GroebnerBasis(ring_, std::move(elems));
    return lb;
  }

 private:
  std::vector<std::size_t> active_indices() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].active) idx.push_back(i);
    }
    return idx;
  }

  void scale_cof(Element& e, const Coefficient& c) {
    for (auto& p : e.cof) p = p.scaled(c);
  }

  void normalize(Element& e) {
    Coefficient scale;
    e.poly = e.poly.primitive(&scale);
    if (!scale.is_one()) scale_cof(e, scale);
  }

  // h := a*h - b*m*g, cancelling the term of h with coefficient hc at m*lm(g).
  void step(Element& h, const Coefficient& hc, const Monomial& m, const Element& g) {
    const Coefficient& gc = g.poly.leading_coefficient();
    Coefficient a = ring_.field().one();
    Coefficient b;
    if (ring_.field().is_rational()) {
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), hc.rational().get_num_mpz_t(), gc.rational().get_num_mpz_t());
      a = Coefficient(mpq_class(gc.rational().get_num() / d));
      b = Coefficient(mpq_class(hc.rational().get_num() / d));
      if (a.sign() < 0) {
        a = -a;
        b = -b;
      }
    } else {
      b = hc / gc;
    }
    if (!a.is_one()) {
      h.poly = h.poly.scaled(a);
      scale_cof(h, a);
    }
    h.poly = h.poly.add_scaled(-b, m, g.poly);
    for (std::size_t i = 0; i < h.cof.size(); ++i) {
      h.cof[i] = h.cof[i].add_scaled(-b, m, g.cof[i]);
    }
  }

  // Reduces h against basis_[reducers] (first match in index order). With
  // full=false only the leading term is reduced.
  void reduce(Element& h, const std::vector<std::size_t>& reducers, bool full) {
    std::size_t k = 0;
    unsigned steps = 0;
    const bool rational = ring_.field().is_rational();
    while (k < h.poly.size()) {
      const Term& t = h.poly.terms()[k];
      const Element* g = nullptr;
      for (std::size_t r : reducers) {
        if (basis_[r].poly.leading_monomial().divides(t.monomial)) {
          g = &basis_[r];
          break;
        }
      }
      if (!g) {
        if (!full) return;
        ++k;
        continue;
      }
      Monomial m = t.monomial / g->poly.leading_monomial();
      Coefficient hc = t.coefficient;
      step(h, hc, m, *g);
      if (rational && ++steps % 16 == 0) normalize(h);
    }
  }

  Element spoly(std::size_t i, std::size_t j) {
    const Element& f = basis_[i];
    const Element& g = basis_[j];
    Monomial l = lcm(f.poly.leading_monomial(), g.poly.leading_monomial());
    Element h = f;
    h.active = true;
    Monomial mf = l / f.poly.leading_monomial();
    h.poly = h.poly.times_monomial(mf, ring_.field().one());
    for (auto& c : h.cof) c = c.times_monomial(mf, ring_.field().one());
    Coefficient hc = h.poly.leading_coefficient();
    step(h, hc, l / g.poly.leading_monomial(), g);
    return h;
  }

  // Returns true once the unit ideal is detected.
  bool add(Element e) {
    std::size_t h = basis_.size();
    bool unit = e.poly.is_unit();
    basis_.push_back(std::move(e));
    if (unit) {
      unit_ = h;
      pairs_.clear();
      return true;
    }
    update(h);
    return false;
  }

  // Gebauer-Möller pair update.
  void update(std::size_t h) {
    const Monomial lh = basis_[h].poly.leading_monomial();
    struct Cand {
      std::size_t g;
      Monomial l;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < h; ++g) {
      if (!basis_[g].active) continue;
      const Monomial& lg = basis_[g].poly.leading_monomial();
      cands.push_back(Cand{g, lcm(lg, lh), lg.coprime(lh)});
    }
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const Cand& c = cands[a];
      bool keep = true;
      if (!c.coprime) {
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b) {
          if (cands[b].l.divides(c.l)) keep = false;
        }
        for (std::size_t d = 0; d < kept.size() && keep; ++d) {
          if (kept[d].l.divides(c.l)) keep = false;
        }
      }
      if (keep) kept.push_back(c);
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) &&
                  !(lcm(basis_[p.i].poly.leading_monomial(), lh) == p.lcm) &&
                  !(lcm(basis_[p.j].poly.leading_monomial(), lh) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& c : kept) {
      if (!c.coprime) next.push_back(Pair{c.g, h, std::move(c.l)});
    }
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < h; ++g) {
      if (basis_[g].active && lh.divides(basis_[g].poly.leading_monomial())) {
        basis_[g].active = false;
      }
    }
  }

  PolyRing ring_;
  bool track_;
  std::size_t ngens_;
  const BuchbergerOptions& options_;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
  std::optional<std::size_t> unit_;
};

void audit(const GroebnerBasis& g, std::span<const Polynomial> gens) {
#ifdef REESMOD_VERIFY_GROEBNER
  bool ok = is_reduced(g) && satisfies_buchberger_criterion(g);
  for (std::size_t i = 0; ok && i < gens.size(); ++i) {
    if (!normal_form(gens[i], g).is_zero()) ok = false;
  }
  if (!ok) {
    ++g_failed;
    throw std::logic_error("Gröbner basis self-check failed");
  }
  ++g_verified;
#else
  (void)g;
  (void)gens;
#endif
}

}  // namespace

GroebnerBasis buchberger(const PolyRing& ring, std::span<const Polynomial> gens,
                         const BuchbergerOptions& options) {
  Engine engine(ring, false, gens.size(), options);
  engine.run(gens);
  GroebnerBasis g = engine.finish().basis;
  audit(g, gens);
  return g;
}

LiftedBasis buchberger_with_cofactors(const PolyRing& ring, std::span<const Polynomial> gens,
                                      const BuchbergerOptions& options) {
  Engine engine(ring, true, gens.size(), options);
  engine.run(gens);
  LiftedBasis lb = engine.finish();
  audit(lb.basis, gens);
  return lb;
}

std::optional<std::vector<Polynomial>> express_in_generators(const Polynomial& p,
                                                             std::span<const Polynomial> gens,
                                                             const BuchbergerOptions& options) {
  const PolyRing& ring = p.ring();
  LiftedBasis lb = buchberger_with_cofactors(ring, gens, options);
  const auto& elems = lb.basis.elements();
  std::vector<Polynomial> coeffs(gens.size(), Polynomial(ring));
  if (p.is_zero()) return coeffs;
  if (elems.empty()) return std::nullopt;
  DivisionResult div = multivariate_division(p, elems);
  if (!div.remainder.is_zero()) return std::nullopt;
  for (std::size_t j = 0; j < elems.size(); ++j) {
    if (div.quotients[j].is_zero()) continue;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      coeffs[i] += div.quotients[j] * lb.cofactors[j][i];
    }
  }
  Polynomial check(ring);
  for (std::size_t i = 0; i < gens.size(); ++i) check += coeffs[i] * gens[i];
  if (!(check == p)) throw std::logic_error("cofactor tracking produced an invalid lift");
  return coeffs;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  require_same_ring(p.ring(), g.ring());
  if (g.elements().empty()) return p;
  return multivariate_division(p, g.elements()).remainder;
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!(a.ring().order() == b.ring().order())) {
    throw std::invalid_argument("reduced bases are only comparable under the same order");
  }
  require_same_ring(a.ring(), b.ring());
  return a.elements() == b.elements();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_monomial(l / f.leading_monomial(), f.leading_coefficient().inverse());
  return a.add_scaled(-g.leading_coefficient().inverse(), l / g.leading_monomial(), g);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& g) {
  const auto& e = g.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i].leading_monomial().coprime(e[j].leading_monomial())) continue;
      if (!normal_form(s_polynomial(e[i], e[j]), g).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(const GroebnerBasis& g) {
  const auto& e = g.elements();
  const auto& ord = g.ring().order();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].is_zero() || !e[i].leading_coefficient().is_one()) return false;
    if (i > 0 && !ord.less(e[i - 1].leading_monomial(), e[i].leading_monomial())) return false;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : e[i].terms()) {
        if (e[j].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

GroebnerAudit groebner_audit() {
#ifdef REESMOD_VERIFY_GROEBNER
  return GroebnerAudit{g_verified.load(), g_failed.load(), true};
#else
  return GroebnerAudit{g_verified.load(), g_failed.load(), false};
#endif
}

}  // namespace reesmod
