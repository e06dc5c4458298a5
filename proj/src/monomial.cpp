#include "reesmod/monomial.hpp"

#include <algorithm>
#include <limits>

namespace reesmod {

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > std::numeric_limits<Exponent>::max() - other.exps_[i]) throw ExponentOverflow();
    exps_[i] += other.exps_[i];
  }
  return *this;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

namespace {

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

void MonomialOrder::check_arity(std::size_t nvars) const {
  if (kind_ == Kind::Block && block_ > nvars) {
    throw std::invalid_argument("block order eliminates more variables than the ring has");
  }
  if (kind_ == Kind::Weighted && weights_.size() != nvars) {
    throw std::invalid_argument("weight vector length does not match the number of variables");
  }
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::Grevlex:
      return grevlex_range(a, b, 0, a.size());
    case Kind::Block: {
      auto c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, a.size());
    }
    case Kind::Weighted: {
      std::uint64_t wa = 0, wb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        wa += weights_[i] * a[i];
        wb += weights_[i] * b[i];
      }
      if (wa != wb) return wa <=> wb;
      return grevlex_range(a, b, 0, a.size());
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Block:
      return "block(" + std::to_string(block_) + ")";
    case Kind::Weighted: {
      std::string s = "weighted(";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(weights_[i]);
      }
      return s + ")";
    }
  }
  return {};
}

}  // namespace reesmod
