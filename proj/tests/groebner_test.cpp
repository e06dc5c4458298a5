#include <doctest.h>

#include <algorithm>
#include <stop_token>

#include "reesmod/division.hpp"
#include "support.hpp"

using namespace support;

namespace {

GroebnerBasis gb(const PolyRing& r, std::initializer_list<std::string_view> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(P(r, g));
  return buchberger(r, ps);
}

// Membership of every generator of `a` in `b`, by reduction against b's basis.
bool contained(const std::vector<Polynomial>& a, const GroebnerBasis& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](const Polynomial& p) { return normal_form(p, b).is_zero(); });
}

std::vector<Polynomial> random_ideal(Random& rnd, const PolyRing& r) {
  std::vector<Polynomial> gens;
  int m = rnd.integer(1, 3);
  for (int i = 0; i < m; ++i) gens.push_back(rnd.nonzero_polynomial(r, 3, 3));
  return gens;
}

}  // namespace

TEST_CASE("basis examples") {
  PolyRing r = ring({"x", "y"});
  CHECK(strings(gb(r, {"x", "y"}).elements()) == std::vector<std::string>{"y", "x"});
  CHECK(strings(gb(r, {"x^2 + y^2", "x^2 - y^2"}).elements()) ==
        std::vector<std::string>{"y^2", "x^2"});

  PolyRing s = ring({"x", "y", "u", "v"});
  GroebnerBasis k = gb(s, {"x*v - y*u"});
  REQUIRE(k.size() == 1);
  // Monic in grevlex, where y*u leads.
  CHECK(k.elements()[0] == -P(s, "x*v - y*u"));
}

TEST_CASE("empty and unit inputs") {
  PolyRing r = ring({"x"});
  CHECK(buchberger(r, std::vector<Polynomial>{}).is_zero_ideal());
  CHECK(buchberger(r, std::vector<Polynomial>{Polynomial(r)}).is_zero_ideal());
  CHECK(gb(r, {"x", "x + 1"}).is_unit_ideal());
}

TEST_CASE("normal forms") {
  PolyRing s = ring({"x", "y", "u", "v"}, MonomialOrder::lex());
  GroebnerBasis k = gb(s, {"x*v - y*u"});
  // x^2*v = x*(x*v - y*u) + x*y*u.
  CHECK(normal_form(P(s, "x^2*v"), k) == P(s, "x*y*u"));
  CHECK(normal_form(P(s, "x*v - y*u"), k).is_zero());

  PolyRing r = ring({"x"});
  CHECK(normal_form(P(r, "1"), gb(r, {"x^2 - x"})).to_string() == "1");
}

TEST_CASE("ideal equality") {
  PolyRing r = ring({"x", "y"});
  CHECK(ideal_equal(gb(r, {"x", "y"}), gb(r, {"y", "x + y"})));
  CHECK_FALSE(ideal_equal(gb(r, {"x^2"}), gb(r, {"x"})));

  PolyRing s = ring({"x", "y", "u", "v"});
  std::vector<Polynomial> a{P(s, "x*v - y*u"), P(s, "x*u")};
  std::vector<Polynomial> same{P(s, "x*u"), P(s, "x*v - y*u + 3*x*u")};
  std::vector<Polynomial> other{P(s, "x*u"), P(s, "x*v")};
  GroebnerBasis ga = buchberger(s, a), gs = buchberger(s, same), go = buchberger(s, other);
  bool mutual_same = contained(a, gs) && contained(same, ga);
  bool mutual_other = contained(a, go) && contained(other, ga);
  CHECK(mutual_same);
  CHECK_FALSE(mutual_other);
  CHECK(ideal_equal(ga, gs) == mutual_same);
  CHECK(ideal_equal(ga, go) == mutual_other);

  PolyRing l = r.with_order(MonomialOrder::lex());
  CHECK_THROWS_AS(ideal_equal(gb(r, {"x"}), gb(l, {"x"})), std::invalid_argument);
}

TEST_CASE("bases over a prime field") {
  PolyRing r = ring({"x", "y"}, MonomialOrder::grevlex(), Field::prime(7));
  GroebnerBasis g = gb(r, {"x^2 + y^2", "x^2 - y^2"});
  CHECK(strings(g.elements()) == std::vector<std::string>{"y^2", "x^2"});
  CHECK(satisfies_buchberger_criterion(g));
}

TEST_CASE("cofactors reproduce the basis") {
  PolyRing r = ring({"x", "y", "z"});
  std::vector<Polynomial> gens{P(r, "x^2 - y"), P(r, "x*y - z"), P(r, "y^2 - x*z")};
  LiftedBasis lb = buchberger_with_cofactors(r, gens);
  CHECK(lb.basis == buchberger(r, gens));
  for (std::size_t j = 0; j < lb.basis.size(); ++j) {
    Polynomial sum(r);
    for (std::size_t i = 0; i < gens.size(); ++i) sum += lb.cofactors[j][i] * gens[i];
    CHECK(sum == lb.basis.elements()[j]);
  }
}

TEST_CASE("expressing members in the generators") {
  PolyRing r = ring({"x", "y"});
  std::vector<Polynomial> gens{P(r, "x"), P(r, "y")};
  auto c = express_in_generators(P(r, "x^2"), gens);
  REQUIRE(c);
  CHECK((*c)[0] * gens[0] + (*c)[1] * gens[1] == P(r, "x^2"));
  CHECK_FALSE(express_in_generators(P(r, "x + 1"), gens));
}

TEST_CASE("cancellation") {
  PolyRing r = ring({"x", "y", "z"});
  std::vector<Polynomial> gens{P(r, "x^2 - y"), P(r, "x*y - z"), P(r, "y^2 - x*z")};
  std::stop_source src;
  src.request_stop();
  BuchbergerOptions opts{src.get_token()};
  CHECK_THROWS_AS(buchberger(r, gens, opts), Cancelled);
}

TEST_CASE("property: reduced bases satisfy the Buchberger criterion") {
  Random rnd(21);
  PolyRing r = ring({"x", "y", "z"});
  for (int k = 0; k < 60; ++k) {
    GroebnerBasis g = buchberger(r, random_ideal(rnd, r));
    CHECK(is_reduced(g));
    CHECK(satisfies_buchberger_criterion(g));
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        CHECK(normal_form(s_polynomial(g.elements()[i], g.elements()[j]), g).is_zero());
      }
    }
  }
}

TEST_CASE("property: combinations of generators reduce to zero") {
  Random rnd(22);
  PolyRing r = ring({"x", "y", "z"});
  for (int k = 0; k < 100; ++k) {
    std::vector<Polynomial> gens = random_ideal(rnd, r);
    GroebnerBasis g = buchberger(r, gens);
    Polynomial p(r);
    for (const auto& gi : gens) p += rnd.polynomial(r, 2, 3) * gi;
    CHECK(normal_form(p, g).is_zero());
  }
}

TEST_CASE("property: permuting generators gives the same basis") {
  Random rnd(23);
  PolyRing r = ring({"x", "y", "z"});
  for (int k = 0; k < 40; ++k) {
    std::vector<Polynomial> gens = random_ideal(rnd, r);
    gens.push_back(rnd.nonzero_polynomial(r, 2, 3));
    GroebnerBasis g = buchberger(r, gens);
    rnd.shuffle(gens);
    CHECK(buchberger(r, gens) == g);
    CHECK(buchberger(r, g.elements()) == g);
  }
}
