// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "reesmod/charts.hpp"
#include "support.hpp"

using namespace support;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed conditions for one criterion.
class Checker {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (!failures_.empty()) failures_ += "; ";
      failures_ += what;
    }
  }
  Outcome done(std::string detail) const {
    return {pass_, pass_ ? std::move(detail) : failures_};
  }

 private:
  bool pass_ = true;
  std::string failures_;
};

Ideal image(const Ideal& j, const RingMap& phi) {
  std::vector<Polynomial> gens;
  for (const auto& g : j.generators()) gens.push_back(phi(g));
  return Ideal(phi.target(), gens);
}

Outcome criterion1() {
  Checker c;
  PolyRing r = ring({"x", "y"});
  ModificationCentre centre(I(r, {"x", "y"}), P(r, "x^2"));
  ReesPresentation rees = rees_presentation(centre.ideal(), {"u", "v"});
  ProperTransform pt = proper_transform(centre, {"u", "v"});
  const PolyRing& rr = rees.rees_ring;
  c.require(rr.order() == MonomialOrder::grevlex(), "Rees ring is not grevlex");
  c.require(rees.kernel.groebner() == I(rr, {"x*v - y*u"}).groebner(), "kernel differs from <xv - yu>");
  c.require(pt.ideal.groebner() == I(rr, {"x*v - y*u", "x*u"}).groebner(),
            "proper transform differs from <xv - yu, xu>");
  return c.done("kernel " + rees.kernel.canonical().to_string() + ", proper " +
                pt.ideal.canonical().to_string());
}

Outcome criterion2() {
  Checker c;
  PolyRing r = ring({"x", "y"});
  ModificationCentre centre(I(r, {"x", "y"}), P(r, "x^2"));
  ProperTransform pt = proper_transform(centre, {"u", "v"});
  StrictTransform st = strict_transform(centre, {"u", "v"});
  c.require(!(pt.saturated == st.saturated), "saturated transforms coincide");

  // Chart v = 1 has coordinates (y, u) with x = y*u and exceptional divisor y.
  PolyRing yu = ring({"y", "u"});
  Polynomial pulled = P(yu, "(y*u)^2"), exc = P(yu, "y");
  Ideal oracle_strict = saturate_by_element(Ideal(yu, {pulled}), exc);
  Ideal oracle_proper(yu, {*exact_quotient(pulled, exc)});
  c.require(oracle_strict == I(yu, {"u^2"}), "oracle strict transform is not <u^2>");

  Ideal ds = dehomogenize(st.ideal, st.rees, 1);
  Ideal dp = dehomogenize(pt.ideal, pt.rees, 1);
  RingMap to_chart(ds.ring(), yu, {P(yu, "y*u"), P(yu, "y"), P(yu, "u")});
  Ideal chart_strict = image(ds, to_chart), chart_proper = image(dp, to_chart);
  c.require(chart_strict == oracle_strict, "chart strict transform differs from oracle");
  c.require(chart_proper == oracle_proper, "chart proper transform differs from oracle");
  c.require(chart_proper.contains(P(yu, "y*u^2")) && !chart_proper.contains(P(yu, "u^2")),
            "chart proper transform lacks the exceptional factor");
  return c.done("chart v=1: strict " + chart_strict.canonical().to_string() + ", proper " +
                chart_proper.canonical().to_string());
}

Outcome criterion3() {
  Checker c;
  std::vector<std::vector<std::string>> cases{{"x", "y"}, {"x", "y", "z"}};
  for (const auto& names : cases) {
    PolyRing r = ring(names);
    std::vector<Polynomial> seq;
    for (std::size_t i = 0; i < names.size(); ++i) seq.push_back(Polynomial::variable(r, i));
    std::string tag = "(" + std::to_string(names.size()) + " variables)";
    c.require(is_regular_sequence(seq).regular, "not regular " + tag);
    c.require(determinantal_ideal(r, seq) == rees_presentation(Ideal(r, seq)).kernel,
              "minors differ from kernel " + tag);
    c.require(transforms_equal(ModificationCentre(Ideal(r, seq), seq[0])).equal_as_subschemes,
              "transforms differ " + tag);
  }
  return c.done("(x,y) and (x,y,z): regular, minors = kernel, transforms equal");
}

Outcome criterion4() {
  Checker c;
  Random rnd(20240401);
  int agree = 0;
  const int total = 25;
  for (int k = 0; k < total; ++k) {
    std::size_t nvars = static_cast<std::size_t>(rnd.integer(1, 3));
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(nvars);
    PolyRing r = ring(names);
    std::vector<Polynomial> gens;
    int m = rnd.integer(1, 3);
    while (static_cast<int>(gens.size()) < m) gens.push_back(rnd.nonzero_polynomial(r, 3, 2));
    Polynomial f = gens[static_cast<std::size_t>(rnd.integer(0, m - 1))];
    try {
      ModificationRing mr = modification_ring(ModificationCentre(Ideal(r, gens), f));
      if (mr.relations == mr.direct_relations && relations_vanish(mr)) ++agree;
    } catch (const std::logic_error&) {
    }
  }
  c.require(agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree");
  return c.done(std::to_string(agree) + "/" + std::to_string(total) + " random centres agree");
}

ChartAtlas projective_line() {
  PolyRing a = ring({"s"}), b = ring({"u"});
  ChartAtlas atlas({a, b});
  atlas.add_overlap(0, 1, P(a, "s"), {F(a, "1/s")});
  atlas.add_overlap(1, 0, P(b, "u"), {F(b, "1/u")});
  return atlas;
}

Outcome criterion5() {
  Checker c;
  ChartAtlas atlas = projective_line();
  CartierDivisor d{{P(atlas.charts()[0], "s"), P(atlas.charts()[1], "1")}};
  GlobalModification g = complement_of_divisor(atlas, d);
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    const PolyRing& r = atlas.charts()[i];
    Membership m = membership_in_modification(ModificationCentre(Ideal::unit(r), d.local_equations[i]),
                                              Polynomial::constant(r, 1), 1);
    c.require(m.member && m.n == 1, "1/f_" + std::to_string(i) + " not a member at N=1");
  }
  c.require(g.consistent(), "consistency report fails");
  c.require(g.inconclusive() == 0, "inconclusive overlaps");
  return c.done("1/f_i members at N=1, " + std::to_string(g.consistency.size()) +
                " overlap checks pass");
}

Outcome criterion6() {
  Checker c;
  for (unsigned d = 1; d <= 3; ++d) {
    PolyRing r = ring({"w", "z"});
    Polynomial zd = P(r, "z").pow(d);
    ModificationRing m = modification_ring(ModificationCentre(Ideal(r, {P(r, "w"), zd}), zd));
    const PolyRing& rr = m.rees.rees_ring;
    Ideal expected(rr, {P(rr, "T0 - 1"), P(rr, "z").pow(d) * P(rr, "T1") - P(rr, "w")});
    c.require(m.relations == expected, "relations differ for d=" + std::to_string(d));
    // The substitution w = z^d U, T0 = 1, T1 = U has exactly the relations as kernel.
    PolyRing zu = ring({"z", "U"});
    RingMap phi(rr, zu, {P(zu, "z").pow(d) * P(zu, "U"), P(zu, "z"), P(zu, "1"), P(zu, "U")});
    c.require(kernel_of_map(phi) == m.relations, "not a polynomial ring for d=" + std::to_string(d));
  }

  PolyRing a = ring({"s", "w"}), b = ring({"u", "w"});
  ChartAtlas atlas({a, b});
  atlas.add_overlap(0, 1, P(a, "s"), {F(a, "1/s"), F(a, "w/s")});
  atlas.add_overlap(1, 0, P(b, "u"), {F(b, "1/u"), F(b, "w/u")});
  GlobalModification g = modify_global(atlas, {{P(a, "s"), P(b, "1")}},
                                       {{I(a, {"s", "w"}), Ideal::unit(b)}});
  c.require(g.consistent() && g.inconclusive() == 0, "two-chart instance inconsistent");
  return c.done("d=1,2,3 give k[z,U]; two-chart overlaps pass");
}

Outcome criterion7() {
  Checker c;
  Random rnd(77);
  const std::uint64_t prime = 2147483647ull;
  PolyRing q = ring({"x", "y", "z"});
  PolyRing fp = q.with_field(Field::prime(prime));
  int discrepancies = 0, members = 0;
  const int total = 500;
  for (int k = 0; k < total; ++k) {
    std::vector<Polynomial> gens{rnd.nonzero_polynomial(q, 2, 3), rnd.nonzero_polynomial(q, 2, 3)};
    Polynomial p = rnd.integer(0, 1) == 0
                       ? rnd.polynomial(q, 2, 2) * gens[0] + rnd.polynomial(q, 2, 2) * gens[1]
                       : rnd.polynomial(q, 3, 4);
    bool over_q = Ideal(q, gens).contains(p);
    std::vector<Polynomial> mod;
    for (const auto& g : gens) mod.push_back(map_by_name(g, fp));
    bool over_p = Ideal(fp, mod).contains(map_by_name(p, fp));
    if (over_q != over_p) ++discrepancies;
    if (over_q) ++members;
  }
  c.require(discrepancies == 0, std::to_string(discrepancies) + " GF(p)/QQ discrepancies");
  GroebnerAudit audit = groebner_audit();
  c.require(audit.enabled, "Groebner self-check not compiled in");
  c.require(audit.failed == 0, std::to_string(audit.failed) + " bases failed the S-polynomial check");
  return c.done(std::to_string(total) + " membership checks agree (" + std::to_string(members) +
                " members); " + std::to_string(audit.verified) + " bases verified, 0 failed");
}

Outcome criterion8() {
  Checker c;
  PolyRing r = ring({"x", "y"});
  FractionalIdeal j{r, {F(r, "y/x")}};
  c.require(denominator_ideal(j) == I(r, {"x"}), "denominator ideal is not (x)");
  ModificationCentre centre = centre_from_fractional(j, P(r, "x"));
  c.require(centre.ideal() == I(r, {"x", "y"}) && centre.divisor_element() == P(r, "x"),
            "centre is not ((x,y), x)");
  ModificationRing m = modification_ring(centre);
  bool image_listed = false;
  for (const auto& h : m.generator_images) image_listed = image_listed || h == F(r, "y/x");
  c.require(image_listed, "y/x is not a generator image");
  Membership mem = membership_in_localized_modification(centre, F(r, "y/x"), P(r, "1"));
  c.require(mem.member && mem.n == 1, "y/x not a member at N=1");
  return c.done("denominators (x), centre ((x, y), x), y/x member at N=1");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion9() {
  Checker c;
  script::RunOptions opts;
  opts.timing = false;
  std::vector<std::filesystem::path> scripts;
  for (const auto& e : std::filesystem::directory_iterator(REESMOD_GOLDEN_DIR)) {
    if (e.path().extension() == ".rm") scripts.push_back(e.path());
  }
  std::sort(scripts.begin(), scripts.end());
  c.require(scripts.size() >= 10, "only " + std::to_string(scripts.size()) + " golden scripts");
  for (const auto& s : scripts) {
    std::string source = slurp(s);
    std::string outputs[2];
    for (auto& o : outputs) {
      std::ostringstream out, err;
      script::run_source(source, s.filename().string(), opts, out, err);
      o = out.str();
    }
    std::filesystem::path expected = s;
    expected.replace_extension(".out");
    c.require(outputs[0] == outputs[1], s.filename().string() + " differs between runs");
    c.require(std::filesystem::exists(expected) && slurp(expected) == outputs[0],
              s.filename().string() + " differs from the committed output");
  }
  return c.done(std::to_string(scripts.size()) +
                " scripts identical across two runs and to the committed outputs");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_ms;  // 0 means no time limit
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, 1000, criterion1}, {2, 5000, criterion2}, {3, 10000, criterion3},
      {4, 0, criterion4},    {5, 2000, criterion5}, {6, 0, criterion6},
      {8, 0, criterion8},    {9, 0, criterion9},
      // Last, so the audit covers every basis computed above.
      {7, 0, criterion7},
  };
  std::vector<std::string> lines(10);
  bool all = true;
  for (const auto& cr : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_ms > 0 && ms >= cr.limit_ms) {
      o.pass = false;
      o.detail += "; exceeded " + std::to_string(static_cast<int>(cr.limit_ms)) + " ms";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f ms", ms);
    lines[static_cast<std::size_t>(cr.id)] = "criterion " + std::to_string(cr.id) + ": " +
                                             (o.pass ? "PASS" : "FAIL") + " (" + buf + ") " + o.detail;
    all = all && o.pass;
  }
  for (std::size_t i = 1; i < lines.size(); ++i) std::cout << lines[i] << "\n";
  return all ? 0 : 1;
}
