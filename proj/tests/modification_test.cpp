#include <doctest.h>

#include "support.hpp"

using namespace support;

namespace {

// Ideal image under a ring map whose kernel lies inside the ideal.
Ideal image(const Ideal& j, const RingMap& phi) {
  std::vector<Polynomial> gens;
  for (const auto& g : j.generators()) gens.push_back(phi(g));
  return Ideal(phi.target(), gens);
}

// Independent check of a membership claim: p f^(n-k) in I^n, and no smaller n works.
bool first_power(const ModificationCentre& c, const Polynomial& p, unsigned k, unsigned n) {
  auto in_power = [&](unsigned m) {
    return ideal_power(c.ideal(), m).contains(p * c.divisor_element().pow(m - k));
  };
  if (!in_power(n)) return false;
  for (unsigned m = k; m < n; ++m) {
    if (in_power(m)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rees presentations") {
  PolyRing r = ring({"x", "y"});
  ReesPresentation p = rees_presentation(I(r, {"x", "y"}), {"u", "v"});
  CHECK(p.rees_ring.names() == std::vector<std::string>{"x", "y", "u", "v"});
  CHECK(p.kernel == I(p.rees_ring, {"x*v - y*u"}));

  CHECK(rees_presentation(I(r, {"x"})).kernel.is_zero());
  CHECK(rees_presentation(I(r, {"x"})).rees_variables == std::vector<std::string>{"T0"});
  CHECK_THROWS_AS(rees_presentation(Ideal::zero(r)), std::invalid_argument);

  PolyRing clash = ring({"T0", "x"});
  auto names = default_rees_names(clash, 2);
  CHECK(names.size() == 2);
  CHECK(std::find(names.begin(), names.end(), "T0") == names.end());

  PolyRing s = ring({"x", "y", "z"});
  std::vector<Polynomial> seq{P(s, "x"), P(s, "y"), P(s, "z")};
  ReesPresentation q = rees_presentation(Ideal(s, seq));
  CHECK(q.kernel == determinantal_ideal(s, seq));
  // Substituting T_i -> a_i t kills the kernel and each generator is T-homogeneous.
  PolyRing st = ring({"x", "y", "z", "t"});
  RingMap to_t(q.rees_ring, st,
               {P(st, "x"), P(st, "y"), P(st, "z"), P(st, "x*t"), P(st, "y*t"), P(st, "z*t")});
  std::vector<std::size_t> tvars{3, 4, 5};
  for (const auto& g : q.kernel.generators()) {
    CHECK(to_t(g).is_zero());
    CHECK(is_homogeneous_in(g, tvars));
  }
}

TEST_CASE("modification rings of (w, z^d)") {
  for (unsigned d = 1; d <= 3; ++d) {
    CAPTURE(d);
    PolyRing r = ring({"w", "z"});
    Polynomial zd = P(r, "z").pow(d);
    ModificationCentre c(Ideal(r, {P(r, "w"), zd}), zd);
    ModificationRing m = modification_ring(c);
    CHECK(m.rees.generators[0] == zd);
    CHECK(relations_vanish(m));
    CHECK(m.relations == m.direct_relations);

    // A[I/f] is k[z, U] with w = z^d U.
    PolyRing zu = ring({"z", "U"});
    Polynomial zud = P(zu, "z").pow(d);
    RingMap phi(m.rees.rees_ring, zu, {zud * P(zu, "U"), P(zu, "z"), P(zu, "1"), P(zu, "U")});
    CHECK(m.relations == kernel_of_map(phi));
    CHECK(m.relations == Ideal(m.rees.rees_ring, {P(m.rees.rees_ring, "T0 - 1"),
                                                 P(m.rees.rees_ring, "z").pow(d) * P(m.rees.rees_ring, "T1") -
                                                     P(m.rees.rees_ring, "w")}));
  }
}

TEST_CASE("degenerate centres") {
  PolyRing r = ring({"x", "y"});
  SUBCASE("unit ideal gives the localization at f") {
    ModificationRing m = modification_ring(ModificationCentre(Ideal::unit(r), P(r, "x")));
    const PolyRing& rr = m.rees.rees_ring;
    CHECK(m.relations == I(rr, {"T0 - 1", "x*T1 - 1"}));
  }
  SUBCASE("principal ideal changes nothing") {
    ModificationRing m = modification_ring(ModificationCentre(I(r, {"x*y"}), P(r, "x*y")));
    CHECK(m.relations == I(m.rees.rees_ring, {"T0 - 1"}));
  }
  SUBCASE("invalid centres") {
    CHECK_THROWS_AS(ModificationCentre(I(r, {"x", "y"}), P(r, "x + 1")), InvalidCentre);
    CHECK_THROWS_AS(ModificationCentre(I(r, {"x", "y"}), Polynomial(r)), InvalidCentre);
  }
  SUBCASE("f is prepended when it is not a generator") {
    ModificationRing m = modification_ring(ModificationCentre(I(r, {"x", "y"}), P(r, "x + y")));
    CHECK(m.rees.generators.size() == 3);
    CHECK(m.rees.generators[0] == P(r, "x + y"));
    CHECK(relations_vanish(m));
  }
}

TEST_CASE("proper and strict transforms of x^2 along (x, y)") {
  PolyRing r = ring({"x", "y"});
  ModificationCentre c(I(r, {"x", "y"}), P(r, "x^2"));
  ProperTransform pt = proper_transform(c, {"u", "v"});
  StrictTransform st = strict_transform(c, {"u", "v"});
  const PolyRing& rr = pt.rees.rees_ring;
  CHECK(pt.lift == P(rr, "x*u"));
  CHECK(pt.ideal == I(rr, {"x*v - y*u", "x*u"}));
  CHECK(st.ideal.contains(P(rr, "x*u")));
  CHECK(st.ideal.contains(P(rr, "u^2")));
  CHECK_FALSE(st.ideal.contains(P(rr, "u")));
  CHECK_FALSE(transforms_equal(c, {"u", "v"}).equal_as_subschemes);
  CHECK(proper_transform_routes_agree(c));

  SUBCASE("chart v = 1, where x = y*u") {
    PolyRing yu = ring({"y", "u"});
    Polynomial pulled = P(yu, "(y*u)^2");
    Polynomial exc = P(yu, "y");
    Ideal chart_strict = saturate_by_element(Ideal(yu, {pulled}), exc);
    Ideal chart_proper(yu, {*exact_quotient(pulled, exc)});
    CHECK(chart_strict == I(yu, {"u^2"}));
    CHECK(chart_proper == I(yu, {"y*u^2"}));

    Ideal ds = dehomogenize(st.ideal, st.rees, 1);
    Ideal dp = dehomogenize(pt.ideal, pt.rees, 1);
    REQUIRE(ds.ring().names() == std::vector<std::string>{"x", "y", "u"});
    RingMap to_chart(ds.ring(), yu, {P(yu, "y*u"), P(yu, "y"), P(yu, "u")});
    CHECK(ds.contains(P(ds.ring(), "x - y*u")));
    CHECK(image(ds, to_chart) == chart_strict);
    CHECK(image(dp, to_chart) == chart_proper);
  }
  SUBCASE("chart u = 1, where y = x*v") {
    PolyRing xv = ring({"x", "v"});
    Polynomial pulled = P(xv, "x^2");
    Polynomial exc = P(xv, "x");
    Ideal chart_strict = saturate_by_element(Ideal(xv, {pulled}), exc);
    Ideal chart_proper(xv, {*exact_quotient(pulled, exc)});
    CHECK(chart_strict.is_unit());

    Ideal ds = dehomogenize(st.ideal, st.rees, 0);
    Ideal dp = dehomogenize(pt.ideal, pt.rees, 0);
    RingMap to_chart(ds.ring(), xv, {P(xv, "x"), P(xv, "x*v"), P(xv, "v")});
    CHECK(image(ds, to_chart) == chart_strict);
    CHECK(image(dp, to_chart) == chart_proper);
  }
}

TEST_CASE("transforms of a generator") {
  PolyRing r = ring({"x", "y"});
  ModificationCentre c(I(r, {"x", "y"}), P(r, "x"));
  ProperTransform pt = proper_transform(c, {"u", "v"});
  StrictTransform st = strict_transform(c, {"u", "v"});
  const PolyRing& rr = pt.rees.rees_ring;
  CHECK(pt.lift == P(rr, "u"));
  CHECK(pt.saturated == I(rr, {"x", "u"}));
  CHECK(st.saturated == I(rr, {"x", "u"}));
  CHECK(transforms_equal(c, {"u", "v"}).equal_as_subschemes);

  PolyRing s = ring({"x", "y", "z"});
  CHECK(transforms_equal(ModificationCentre(I(s, {"x", "y", "z"}), P(s, "x"))).equal_as_subschemes);

  ModificationCentre unit(Ideal::unit(r), P(r, "x*y + 1"));
  StrictTransform su = strict_transform(unit);
  CHECK(su.ideal == Ideal(su.rees.rees_ring, {su.rees.lift(P(r, "x*y + 1"))}));

  ModificationCentre principal(I(r, {"x*y"}), P(r, "x*y"));
  ProperTransform pp = proper_transform(principal);
  CHECK(pp.ideal == I(pp.rees.rees_ring, {"T0"}));
}

TEST_CASE("determinantal ideals") {
  PolyRing r = ring({"x", "y"});
  std::vector<Polynomial> xy{P(r, "x"), P(r, "y")};
  Ideal d = determinantal_ideal(r, xy);
  CHECK(d == I(d.ring(), {"x*T1 - y*T0"}));
  CHECK(d.generators().size() == 1);
  std::vector<Polynomial> single{P(r, "x")};
  CHECK(determinantal_ideal(r, single).is_zero());
}

TEST_CASE("exceptional ideal") {
  PolyRing r = ring({"x", "y"});
  ModificationCentre c(I(r, {"x", "y"}), P(r, "x"));
  Ideal e = exceptional_ideal(c, {"u", "v"});
  CHECK(e == I(e.ring(), {"x*v - y*u", "x", "y"}));
  ReesPresentation rp = transform_presentation(c, {"u", "v"});
  Ideal chart = dehomogenize(e, rp, 0);
  PolyRing xv = ring({"x", "v"});
  RingMap to_chart(chart.ring(), xv, {P(xv, "x"), P(xv, "x*v"), P(xv, "v")});
  CHECK(image(chart, to_chart) == I(xv, {"x"}));

  CHECK(exceptional_ideal(ModificationCentre(Ideal::unit(r), P(r, "x"))).is_unit());
}

TEST_CASE("membership in A[I/f]") {
  PolyRing wz = ring({"w", "z"});
  for (unsigned d = 1; d <= 3; ++d) {
    Polynomial zd = P(wz, "z").pow(d);
    ModificationCentre c(Ideal(wz, {P(wz, "w"), zd}), zd);
    Membership m = membership_in_modification(c, P(wz, "w"), 1);
    CHECK(m.member);
    CHECK(m.n == 1);
    CHECK(first_power(c, P(wz, "w"), 1, m.n));
    CHECK(membership_in_modification(c, P(wz, "1"), 0).n == 0);
  }

  PolyRing r = ring({"x", "y"});
  ModificationCentre c(I(r, {"x", "y"}), P(r, "x"));
  Membership sq = membership_in_modification(c, P(r, "y^2"), 2);
  CHECK(sq.member);
  CHECK(sq.n == 2);
  CHECK(first_power(c, P(r, "y^2"), 2, 2));

  Membership inv = membership_in_modification(c, P(r, "1"), 1, 10);
  CHECK_FALSE(inv.member);
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK_FALSE(ideal_power(c.ideal(), n).contains(P(r, "x").pow(n - 1)));
  }
  CHECK_THROWS_AS(membership_in_modification(c, P(r, "y"), 3, 2), std::invalid_argument);

  Membership loc = membership_in_localized_modification(c, F(r, "y^2/x^2"), P(r, "1"));
  CHECK(loc.member);
  CHECK(loc.n == 2);
  CHECK(membership_in_localized_modification(c, F(r, "1/x"), P(r, "x"), 5).member);
}

TEST_CASE("centres from fractional ideals") {
  PolyRing r = ring({"x", "y"});
  FractionalIdeal j{r, {F(r, "y/x")}};
  ModificationCentre c = centre_from_fractional(j, P(r, "x"));
  CHECK(c.ideal() == I(r, {"x", "y"}));
  CHECK(c.divisor_element() == P(r, "x"));

  FractionalIdeal two{r, {F(r, "y/x"), F(r, "y^2/x")}};
  CHECK(strings(centre_from_fractional(two, P(r, "x")).ideal().generators()) ==
        std::vector<std::string>{"x", "y"});

  FractionalIdeal unit{r, {F(r, "1")}};
  ModificationCentre cu = centre_from_fractional(unit, P(r, "1"));
  CHECK(cu.ideal().is_unit());
  ModificationRing mu = modification_ring(cu);
  CHECK(mu.relations == I(mu.rees.rees_ring, {"T0 - 1"}));

  FractionalIdeal bad{r, {F(r, "y/x^2")}};
  CHECK_THROWS_AS(centre_from_fractional(bad, P(r, "x")), InvalidCentre);
}

TEST_CASE("property: lifts agree modulo the kernel") {
  Random rnd(41);
  PolyRing r = ring({"x", "y", "z"});
  for (int k = 0; k < 12; ++k) {
    std::vector<Polynomial> gens{rnd.nonzero_polynomial(r, 2, 2), rnd.nonzero_polynomial(r, 2, 2)};
    std::vector<Polynomial> coeffs{rnd.polynomial(r, 1, 2), rnd.polynomial(r, 1, 2)};
    Polynomial f = coeffs[0] * gens[0] + coeffs[1] * gens[1];
    if (f.is_zero() || f == gens[0] || f == gens[1]) continue;
    ModificationCentre c(Ideal(r, gens), f);
    ProperTransform pt = proper_transform(c);
    Polynomial other(pt.rees.rees_ring);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      other += pt.rees.lift(coeffs[i]) * pt.rees.rees_variable(i);
    }
    CHECK(pt.rees.kernel.contains(pt.lift - other));
  }
}

TEST_CASE("property: both presentations of A[I/f] agree") {
  Random rnd(42);
  PolyRing r = ring({"x", "y", "z"});
  for (int k = 0; k < 10; ++k) {
    std::vector<Polynomial> gens{rnd.nonzero_polynomial(r, 2, 2), rnd.nonzero_polynomial(r, 2, 2)};
    Polynomial f = gens[static_cast<std::size_t>(rnd.integer(0, 1))] * rnd.nonzero_polynomial(r, 1, 2);
    ModificationRing m = modification_ring(ModificationCentre(Ideal(r, gens), f));
    CHECK(m.relations == m.direct_relations);
    CHECK(relations_vanish(m));
  }
}

TEST_CASE("property: regular sequences give determinantal kernels") {
  Random rnd(43);
  PolyRing r = ring({"x", "y", "z"});
  for (int k = 0; k < 10; ++k) {
    std::size_t len = static_cast<std::size_t>(rnd.integer(2, 3));
    std::vector<Polynomial> seq;
    for (std::size_t i = 0; i < len; ++i) {
      seq.push_back(Polynomial::variable(r, i).pow(static_cast<unsigned>(rnd.integer(1, 3))));
    }
    REQUIRE(is_regular_sequence(seq).regular);
    CHECK(rees_presentation(Ideal(r, seq)).kernel == determinantal_ideal(r, seq));
  }
}

TEST_CASE("property: membership persists at larger N") {
  PolyRing r = ring({"x", "y"});
  ModificationCentre c(I(r, {"x", "y"}), P(r, "x"));
  std::vector<std::pair<std::string_view, unsigned>> cases{{"y", 1}, {"y^2", 2}, {"x*y^3", 3}, {"y^3", 3}};
  for (auto [text, k] : cases) {
    Polynomial p = P(r, text);
    Membership m = membership_in_modification(c, p, k, 6);
    REQUIRE(m.member);
    for (unsigned extra = 1; extra <= 2; ++extra) {
      unsigned n = m.n + extra;
      CHECK(ideal_power(c.ideal(), n).contains(p * P(r, "x").pow(n - k)));
    }
  }
}
