#include "reesmod/polynomial.hpp"

#include <algorithm>
#include <set>

#include "reesmod/division.hpp"

namespace reesmod {

PolyRing::PolyRing(std::vector<std::string> names, Field field, MonomialOrder order) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  order.check_arity(names.size());
  d_ = std::make_shared<const Data>(Data{std::move(names), field, std::move(order)});
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  const auto& n = names();
  auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end()) return std::nullopt;
  return static_cast<std::size_t>(it - n.begin());
}

PolyRing PolyRing::with_order(MonomialOrder order) const {
  return PolyRing(names(), field(), std::move(order));
}

PolyRing PolyRing::with_field(Field field) const { return PolyRing(names(), field, order()); }

std::string PolyRing::to_string() const {
  std::string s = field().to_string() + "[";
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (i) s += ",";
    s += names()[i];
  }
  s += "]";
  if (order().kind() != MonomialOrder::Kind::Grevlex) s += " with order " + order().to_string();
  return s;
}

bool PolyRing::operator==(const PolyRing& o) const {
  if (d_ == o.d_) return true;
  return d_->names == o.d_->names && d_->field == o.d_->field && d_->order == o.d_->order;
}

PolyRing ring_extend(const PolyRing& ring, const std::vector<std::string>& new_vars,
                     Position position, MonomialOrder new_order) {
  for (const auto& v : new_vars) {
    if (ring.index_of(v)) throw std::invalid_argument("variable '" + v + "' already exists");
  }
  std::vector<std::string> names;
  if (position == Position::Front) {
    names = new_vars;
    names.insert(names.end(), ring.names().begin(), ring.names().end());
  } else {
    names = ring.names();
    names.insert(names.end(), new_vars.begin(), new_vars.end());
  }
  return PolyRing(std::move(names), ring.field(), std::move(new_order));
}

void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (!(a == b)) throw RingMismatch("ring mismatch: " + a.to_string() + " vs " + b.to_string());
}

Polynomial Polynomial::from_terms(PolyRing ring, std::vector<Term> terms) {
  const auto& ord = ring.order();
  for (const auto& t : terms) {
    if (t.monomial.size() != ring.nvars()) throw std::invalid_argument("monomial arity mismatch");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.monomial, b.monomial) > 0;
  });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  for (const auto& t : p.terms_) {
    if (!p.ring_.field().contains(t.coefficient)) {
      throw std::invalid_argument("coefficient not in " + p.ring_.field().to_string());
    }
  }
  return p;
}

Polynomial Polynomial::constant(PolyRing ring, const Coefficient& c) {
  Monomial one(ring.nvars());
  return monomial(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::constant(PolyRing ring, long c) {
  Coefficient k = ring.field().from_integer(mpz_class(c));
  return constant(std::move(ring), k);
}

Polynomial Polynomial::variable(PolyRing ring, std::size_t index) {
  if (index >= ring.nvars()) throw std::out_of_range("variable index out of range");
  Monomial m(ring.nvars());
  m[index] = 1;
  Coefficient one = ring.field().one();
  return monomial(std::move(ring), std::move(m), one);
}

Polynomial Polynomial::variable(PolyRing ring, const std::string& name) {
  auto i = ring.index_of(name);
  if (!i) throw std::invalid_argument("unknown variable '" + name + "'");
  return variable(std::move(ring), *i);
}

Polynomial Polynomial::monomial(PolyRing ring, Monomial m, const Coefficient& c) {
  if (m.size() != ring.nvars()) throw std::invalid_argument("monomial arity mismatch");
  if (!ring.field().contains(c)) throw std::invalid_argument("coefficient not in ring field");
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Exponent Polynomial::degree_in(std::size_t var) const {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial Polynomial::add_scaled(const Coefficient& c, const Monomial& m,
                                  const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  const auto& ord = ring_.order();
  Polynomial r(ring_);
  if (c.is_zero()) {
    r.terms_ = terms_;
    return r;
  }
  r.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      r.terms_.push_back(*a++);
      continue;
    }
    Monomial bm = b->monomial * m;
    if (a == terms_.end()) {
      r.terms_.push_back(Term{std::move(bm), c * b->coefficient});
      ++b;
      continue;
    }
    auto cmp = ord.compare(a->monomial, bm);
    if (cmp > 0) {
      r.terms_.push_back(*a++);
    } else if (cmp < 0) {
      r.terms_.push_back(Term{std::move(bm), c * b->coefficient});
      ++b;
    } else {
      Coefficient s = a->coefficient + c * b->coefficient;
      if (!s.is_zero()) r.terms_.push_back(Term{std::move(bm), std::move(s)});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  *this = add_scaled(ring_.field().one(), Monomial(ring_.nvars()), o);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  *this = add_scaled(-ring_.field().one(), Monomial(ring_.nvars()), o);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      prod.push_back(Term{s.monomial * t.monomial, s.coefficient * t.coefficient});
    }
  }
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Coefficient& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

void Polynomial::drop_leading_term() {
  if (!terms_.empty()) terms_.erase(terms_.begin());
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::primitive(Coefficient* scale) const {
  if (!ring_.field().is_rational()) {
    if (scale) *scale = is_zero() ? ring_.field().one() : leading_coefficient().inverse();
    return monic();
  }
  if (is_zero()) {
    if (scale) *scale = ring_.field().one();
    return *this;
  }
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : terms_) {
    const mpq_class& q = t.coefficient.rational();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (leading_coefficient().sign() < 0) factor = -factor;
  Coefficient f(factor);
  if (scale) *scale = f;
  if (f.is_one()) return *this;
  return scaled(f);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(ring_ == o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == o.terms_[i].monomial) ||
        !(terms_[i].coefficient == o.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Coefficient c = t.coefficient;
    bool negative = c.is_rational() && c.sign() < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      Exponent e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.names()[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += c.to_string();
    } else if (c.is_one()) {
      s += mono;
    } else {
      s += c.to_string() + "*" + mono;
    }
  }
  return s;
}

Polynomial change_ring(const Polynomial& p, const PolyRing& target,
                       std::span<const std::size_t> var_map) {
  if (var_map.size() != p.ring().nvars()) throw std::invalid_argument("variable map arity");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target.nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (var_map[i] >= target.nvars()) throw std::out_of_range("variable map target out of range");
      m[var_map[i]] += t.monomial[i];
    }
    terms.push_back(Term{std::move(m), target.field().convert(t.coefficient)});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial embed(const Polynomial& p, const PolyRing& extended, Position position) {
  std::size_t n = p.ring().nvars();
  std::size_t offset = position == Position::Front ? extended.nvars() - n : 0;
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i + offset;
  return change_ring(p, extended, map);
}

Polynomial map_by_name(const Polynomial& p, const PolyRing& target) {
  std::vector<std::size_t> map(p.ring().nvars());
  for (std::size_t i = 0; i < map.size(); ++i) {
    auto j = target.index_of(p.ring().names()[i]);
    if (!j) {
      // Variables absent from the target are allowed only if unused.
      if (p.degree_in(i) != 0) {
        throw std::invalid_argument("variable '" + p.ring().names()[i] + "' missing in target ring");
      }
      map[i] = 0;
      continue;
    }
    map[i] = *j;
  }
  return change_ring(p, target, map);
}

std::optional<Polynomial> exact_quotient(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  auto res = multivariate_division(p, std::span<const Polynomial>(&d, 1));
  if (!res.remainder.is_zero()) return std::nullopt;
  return res.quotients.front();
}

std::string to_string(std::span<const Polynomial> polys) {
  std::string s;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += polys[i].to_string();
  }
  return s;
}

}  // namespace reesmod
