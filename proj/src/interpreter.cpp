#include "reesmod/interpreter.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>

#include "reesmod/charts.hpp"

namespace reesmod::script {

namespace {

struct RunError {
  Span span;
  std::string message;
  std::optional<std::string> hint;
};

struct DivisorValue {
  std::string atlas;
  CartierDivisor divisor;
};

struct SheafValue {
  std::string atlas;
  IdealSheaf sheaf;
};

using Value = std::variant<PolyRing, Fraction, Ideal, FractionalIdeal, ModificationCentre,
                           ChartAtlas, DivisorValue, SheafValue>;

const char* kind_name(const Value& v) {
  static const char* names[] = {"a ring",   "a polynomial", "an ideal",  "a fractional ideal",
                                "a centre", "an atlas",     "a divisor", "an ideal sheaf"};
  return names[v.index()];
}

std::string list_string(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::string value_string(const Value& v) {
  struct Visitor {
    std::string operator()(const PolyRing& r) const { return r.to_string(); }
    std::string operator()(const Fraction& f) const { return f.to_string(); }
    std::string operator()(const Ideal& i) const { return i.to_string(); }
    std::string operator()(const FractionalIdeal& j) const {
      std::vector<std::string> parts;
      for (const auto& g : j.generators) parts.push_back(g.to_string());
      return "frac(" + list_string(parts) + ")";
    }
    std::string operator()(const ModificationCentre& c) const {
      return "centre(" + c.ideal().to_string() + ", " + c.divisor_element().to_string() + ")";
    }
    std::string operator()(const ChartAtlas& a) const {
      std::vector<std::string> parts;
      for (const auto& r : a.charts()) parts.push_back(r.to_string());
      return "atlas(" + list_string(parts) + ")";
    }
    std::string operator()(const DivisorValue& d) const {
      std::vector<std::string> parts;
      for (const auto& f : d.divisor.local_equations) parts.push_back(f.to_string());
      return "divisor on " + d.atlas + " (" + list_string(parts) + ")";
    }
    std::string operator()(const SheafValue& s) const {
      std::vector<std::string> parts;
      for (const auto& i : s.sheaf.chart_ideals) parts.push_back(i.to_string());
      return "sheaf on " + s.atlas + " (" + list_string(parts) + ")";
    }
  };
  return std::visit(Visitor{}, v);
}

using Check = std::variant<Ideal, Json>;
using Checks = std::vector<std::pair<std::string, Check>>;

struct Outcome {
  Json result;
  Checks checks;
};

const char* kCommands =
    "rees, modify, proper, strict, transforms_equal, minors, member, denominators, centre_from, "
    "modify_global, complement, validate";

class Interpreter {
 public:
  Interpreter(const RunOptions& options, std::optional<Field> override_field)
      : options_(options), override_(std::move(override_field)) {}

  RunResult run(const Script& script) {
    RunResult out;
    for (std::size_t idx = 0; idx < script.statements.size(); ++idx) {
      const Statement& st = script.statements[idx];
      try {
        if (auto* c = std::get_if<Command>(&st.node)) {
          auto start = std::chrono::steady_clock::now();
          Outcome o = command(*c, st);
          auto stop = std::chrono::steady_clock::now();
          CommandOutput co;
          co.statement = idx;
          co.command = render(*c);
          co.inputs = inputs(*c);
          co.result = std::move(o.result);
          co.timing_ms = std::chrono::duration<double, std::milli>(stop - start).count();
          out.outputs.push_back(std::move(co));
          checks_.emplace(idx, std::move(o.checks));
        } else {
          declare(st);
        }
      } catch (const RunError& e) {
        out.diagnostics.push_back({Severity::Error, e.span, e.message, e.hint});
      } catch (const ValidationFailed& e) {
        std::string report = e.report().to_string();
        if (!report.empty() && report.back() == '\n') report.pop_back();
        out.diagnostics.push_back({Severity::Error, st.span, "validation failed", report});
      } catch (const Cancelled& e) {
        out.diagnostics.push_back({Severity::Error, st.span, e.what(), {}});
      } catch (const std::invalid_argument& e) {
        out.diagnostics.push_back({Severity::Error, st.span, e.what(), {}});
      } catch (const std::domain_error& e) {
        out.diagnostics.push_back({Severity::Error, st.span, e.what(), {}});
      } catch (const std::out_of_range& e) {
        out.diagnostics.push_back({Severity::Error, st.span, e.what(), {}});
      } catch (const std::overflow_error& e) {
        out.diagnostics.push_back({Severity::Error, st.span, e.what(), {}});
      } catch (const std::exception& e) {
        out.diagnostics.push_back(
            {Severity::Error, st.span, std::string("internal error: ") + e.what(), {}});
        out.internal_error = true;
      }
    }
    return out;
  }

  Fraction eval_public(const Expr& e, const PolyRing& r) const { return eval(e, r); }

  const Checks* checks_for(std::size_t statement) const {
    auto it = checks_.find(statement);
    return it == checks_.end() ? nullptr : &it->second;
  }

 private:
  const RunOptions& options_;
  std::optional<Field> override_;
  std::map<std::string, Value> env_;
  std::optional<PolyRing> current_;
  std::map<std::size_t, Checks> checks_;

  // ---- declarations ----

  PolyRing make_ring(const RingSpec& spec) const {
    Field field = spec.field.prime ? Field::prime(*spec.field.prime)
                                   : override_.value_or(Field::rationals());
    MonomialOrder order = MonomialOrder::grevlex();
    if (spec.order) {
      const auto& o = *spec.order;
      if (o.kind == "lex") {
        order = MonomialOrder::lex();
      } else if (o.kind == "block") {
        if (o.params.size() != 1) throw std::invalid_argument("block order takes one argument");
        order = MonomialOrder::block(o.params[0]);
      } else if (o.kind == "weighted") {
        order = MonomialOrder::weighted(o.params);
      }
    }
    return PolyRing(spec.vars, field, order);
  }

  void bind(const Statement& st, const std::string& name, Value v) {
    if (env_.count(name)) {
      throw RunError{st.name_span, "'" + name + "' is already declared",
                     "names are single-assignment"};
    }
    if (current_ && current_->index_of(name) && !std::holds_alternative<PolyRing>(v)) {
      throw RunError{st.name_span, "'" + name + "' is a variable of " + current_->to_string(), {}};
    }
    env_.emplace(name, std::move(v));
  }

  const PolyRing& ring_or_fail(Span span) const {
    if (!current_) throw RunError{span, "no ring declared yet", "start with 'ring A = QQ[x, y];'"};
    return *current_;
  }

  void declare(const Statement& st) {
    struct Visitor {
      Interpreter& in;
      const Statement& st;
      void operator()(const RingDecl& d) {
        PolyRing r = in.make_ring(d.ring);
        in.bind(st, d.name, r);
        in.current_ = r;
      }
      void operator()(const ValueDecl& d) {
        const PolyRing& r = in.ring_or_fail(st.span);
        switch (d.kind) {
          case ValueDecl::Kind::Poly:
            in.bind(st, d.name, in.eval(d.items[0], r));
            break;
          case ValueDecl::Kind::Ideal: {
            std::vector<Polynomial> gens;
            for (const auto& e : d.items) gens.push_back(in.eval_poly(e, r));
            in.bind(st, d.name, Ideal(r, std::move(gens)));
            break;
          }
          case ValueDecl::Kind::Frac: {
            FractionalIdeal j{r, {}};
            for (const auto& e : d.items) j.generators.push_back(in.eval(e, r));
            in.bind(st, d.name, std::move(j));
            break;
          }
          case ValueDecl::Kind::Centre:
            in.bind(st, d.name,
                    ModificationCentre(in.eval_ideal(d.items[0], r), in.eval_poly(d.items[1], r)));
            break;
        }
      }
      void operator()(const AtlasDecl& d) { in.bind(st, d.name, in.make_atlas(d)); }
      void operator()(const ChartDataDecl& d) {
        const ChartAtlas& atlas = in.atlas_named(d.atlas, st.span);
        if (d.entries.size() != atlas.size()) {
          throw RunError{st.span, "expected one entry per chart (" + std::to_string(atlas.size()) +
                                      "), got " + std::to_string(d.entries.size()),
                         {}};
        }
        if (d.kind == ChartDataDecl::Kind::Divisor) {
          DivisorValue v{d.atlas, {}};
          for (std::size_t k = 0; k < d.entries.size(); ++k) {
            v.divisor.local_equations.push_back(in.eval_poly(d.entries[k], atlas.charts()[k]));
          }
          in.bind(st, d.name, std::move(v));
        } else {
          SheafValue v{d.atlas, {}};
          for (std::size_t k = 0; k < d.entries.size(); ++k) {
            v.sheaf.chart_ideals.push_back(in.eval_ideal(d.entries[k], atlas.charts()[k]));
          }
          in.bind(st, d.name, std::move(v));
        }
      }
      void operator()(const Command&) {}
    };
    std::visit(Visitor{*this, st}, st.node);
  }

  ChartAtlas make_atlas(const AtlasDecl& d) {
    std::vector<PolyRing> charts;
    for (const auto& c : d.charts) charts.push_back(make_ring(c));
    ChartAtlas atlas(charts);
    for (const auto& o : d.overlaps) {
      if (o.i >= charts.size() || o.j >= charts.size() || o.i == o.j) {
        throw RunError{o.span, "overlap " + std::to_string(o.i) + " " + std::to_string(o.j) +
                                   " does not name two distinct charts",
                       {}};
      }
      const PolyRing& ri = charts[o.i];
      const PolyRing& rj = charts[o.j];
      std::vector<std::optional<Fraction>> images(rj.nvars());
      for (const auto& [var, e] : o.images) {
        auto idx = rj.index_of(var);
        if (!idx) throw RunError{o.span, "'" + var + "' is not a variable of chart " + std::to_string(o.j), {}};
        if (images[*idx]) throw RunError{o.span, "'" + var + "' is mapped twice", {}};
        images[*idx] = eval(e, ri);
      }
      std::vector<Fraction> full;
      for (std::size_t v = 0; v < images.size(); ++v) {
        if (!images[v]) {
          throw RunError{o.span, "no image given for '" + rj.names()[v] + "'",
                         "every variable of the second chart needs an image"};
        }
        full.push_back(*images[v]);
      }
      atlas.add_overlap(o.i, o.j, eval_poly(o.g, ri), std::move(full));
    }
    return atlas;
  }

  // ---- evaluation ----

  const Value* lookup(const std::string& name) const {
    auto it = env_.find(name);
    return it == env_.end() ? nullptr : &it->second;
  }

  template <class T>
  const T& named(const Expr& e, const char* what) const {
    if (e.kind != Expr::Kind::Name) throw RunError{e.span, std::string("expected ") + what, {}};
    const Value* v = lookup(e.text);
    if (!v) throw RunError{e.span, "unknown name '" + e.text + "'", {}};
    if (auto* t = std::get_if<T>(v)) return *t;
    throw RunError{e.span, "'" + e.text + "' is " + kind_name(*v) + ", expected " + what, {}};
  }

  const ChartAtlas& atlas_named(const std::string& name, Span span) const {
    const Value* v = lookup(name);
    if (!v) throw RunError{span, "unknown atlas '" + name + "'", {}};
    if (auto* a = std::get_if<ChartAtlas>(v)) return *a;
    throw RunError{span, "'" + name + "' is " + kind_name(*v) + ", expected an atlas", {}};
  }

  static void same_ring(const PolyRing& expected, const PolyRing& got, const Expr& e) {
    if (!(expected == got)) {
      throw RunError{e.span, "'" + e.text + "' lives in " + got.to_string() + ", expected " +
                                 expected.to_string(),
                     {}};
    }
  }

  static unsigned exponent(const Expr& e) {
    unsigned long v = 0;
    try {
      v = std::stoul(e.text);
    } catch (const std::exception&) {
      v = ~0ul;
    }
    if (v > 0xFFFFFFFFul) throw RunError{e.span, "exponent too large", {}};
    return static_cast<unsigned>(v);
  }

  Fraction eval(const Expr& e, const PolyRing& r) const {
    switch (e.kind) {
      case Expr::Kind::Number:
        return Fraction(Polynomial::constant(r, r.field().from_integer(mpz_class(e.text))));
      case Expr::Kind::Name: {
        if (auto idx = r.index_of(e.text)) return Fraction(Polynomial::variable(r, *idx));
        const Value* v = lookup(e.text);
        if (!v) {
          throw RunError{e.span, "unknown name '" + e.text + "'",
                         "not a variable of " + r.to_string() + " and not declared"};
        }
        if (auto* f = std::get_if<Fraction>(v)) {
          same_ring(r, f->ring(), e);
          return *f;
        }
        throw RunError{e.span, "'" + e.text + "' is " + kind_name(*v) + ", expected a polynomial",
                       {}};
      }
      case Expr::Kind::Neg:
        return -eval(e.args[0], r);
      case Expr::Kind::Add:
        return eval(e.args[0], r) + eval(e.args[1], r);
      case Expr::Kind::Sub:
        return eval(e.args[0], r) - eval(e.args[1], r);
      case Expr::Kind::Mul:
        return eval(e.args[0], r) * eval(e.args[1], r);
      case Expr::Kind::Div: {
        Fraction den = eval(e.args[1], r);
        if (den.is_zero()) throw RunError{e.args[1].span, "division by zero", {}};
        return eval(e.args[0], r) / den;
      }
      case Expr::Kind::Pow:
        return eval(e.args[0], r).pow(exponent(e.args[1]));
      case Expr::Kind::Tuple:
        throw RunError{e.span, "a tuple is not a polynomial", {}};
    }
    throw RunError{e.span, "unsupported expression", {}};
  }

  Polynomial eval_poly(const Expr& e, const PolyRing& r) const {
    Fraction f = eval(e, r);
    if (auto p = f.as_polynomial()) return *p;
    throw RunError{e.span, render(e) + " = " + f.to_string() + " is not a polynomial", {}};
  }

  Ideal eval_ideal(const Expr& e, const PolyRing& r) const {
    if (e.kind == Expr::Kind::Name && !r.index_of(e.text)) {
      if (const Value* v = lookup(e.text); v && std::holds_alternative<Ideal>(*v)) {
        const Ideal& i = std::get<Ideal>(*v);
        same_ring(r, i.ring(), e);
        return i;
      }
    }
    std::vector<Polynomial> gens;
    if (e.kind == Expr::Kind::Tuple) {
      for (const auto& a : e.args) gens.push_back(eval_poly(a, r));
    } else {
      gens.push_back(eval_poly(e, r));
    }
    return Ideal(r, std::move(gens));
  }

  FractionalIdeal eval_fractional(const Expr& e, const PolyRing& r) const {
    if (e.kind == Expr::Kind::Name && !r.index_of(e.text)) {
      if (const Value* v = lookup(e.text); v && std::holds_alternative<FractionalIdeal>(*v)) {
        const auto& j = std::get<FractionalIdeal>(*v);
        same_ring(r, j.ring, e);
        return j;
      }
    }
    FractionalIdeal j{r, {}};
    if (e.kind == Expr::Kind::Tuple) {
      for (const auto& a : e.args) j.generators.push_back(eval(a, r));
    } else {
      j.generators.push_back(eval(e, r));
    }
    return j;
  }

  // The ring of the first named argument, else the current ring.
  PolyRing ring_for(const Command& c, Span span) const {
    if (!c.args.empty() && c.args[0].kind == Expr::Kind::Name) {
      if (const Value* v = lookup(c.args[0].text)) {
        if (auto* i = std::get_if<Ideal>(v)) return i->ring();
        if (auto* m = std::get_if<ModificationCentre>(v)) return m->ring();
        if (auto* j = std::get_if<FractionalIdeal>(v)) return j->ring;
        if (auto* f = std::get_if<Fraction>(v)) return f->ring();
      }
    }
    return ring_or_fail(span);
  }

  Json inputs(const Command& c) const {
    Json out = Json::array();
    for (const auto& a : c.args) {
      Json item;
      item["expr"] = render(a);
      if (a.kind == Expr::Kind::Name) {
        if (const Value* v = lookup(a.text)) item["value"] = value_string(*v);
      }
      out.push_back(std::move(item));
    }
    return out;
  }

  // ---- commands ----

  static void arity(const Command& c, Span span, std::size_t lo, std::size_t hi,
                    const std::string& usage) {
    if (c.args.size() < lo || c.args.size() > hi) {
      throw RunError{span, c.name + " expects " + usage, {}};
    }
  }

  // (centre) or (ideal, element).
  ModificationCentre centre_args(const Command& c, Span span) const {
    arity(c, span, 1, 2, "(centre) or (ideal, element)");
    if (c.args.size() == 1) return named<ModificationCentre>(c.args[0], "a centre");
    PolyRing r = ring_for(c, span);
    return ModificationCentre(eval_ideal(c.args[0], r), eval_poly(c.args[1], r));
  }

  Outcome command(const Command& c, const Statement& st) {
    using Handler = Outcome (Interpreter::*)(const Command&, Span);
    static const std::map<std::string, Handler> table = {
        {"rees", &Interpreter::cmd_rees},
        {"modify", &Interpreter::cmd_modify},
        {"proper", &Interpreter::cmd_proper},
        {"strict", &Interpreter::cmd_strict},
        {"transforms_equal", &Interpreter::cmd_transforms_equal},
        {"minors", &Interpreter::cmd_minors},
        {"member", &Interpreter::cmd_member},
        {"denominators", &Interpreter::cmd_denominators},
        {"centre_from", &Interpreter::cmd_centre_from},
        {"modify_global", &Interpreter::cmd_modify_global},
        {"complement", &Interpreter::cmd_complement},
        {"validate", &Interpreter::cmd_validate},
    };
    auto it = table.find(c.name);
    if (it == table.end()) {
      throw RunError{st.name_span, "unknown command '" + c.name + "'",
                     std::string("commands: ") + kCommands};
    }
    return (this->*(it->second))(c, st.span);
  }

  Outcome cmd_rees(const Command& c, Span span) {
    arity(c, span, 1, 1, "(ideal)");
    PolyRing r = ring_for(c, span);
    ReesPresentation p = rees_presentation(eval_ideal(c.args[0], r), c.names);
    Outcome o;
    o.result["ring"] = p.rees_ring.to_string();
    o.result["rees_vars"] = p.rees_variables;
    Json gens = Json::array();
    for (const auto& g : p.generators) gens.push_back(g.to_string());
    o.result["generators"] = std::move(gens);
    o.result["kernel"] = p.kernel.to_string();
    o.checks.emplace_back("kernel", p.kernel);
    return o;
  }

  Outcome cmd_modify(const Command& c, Span span) {
    ModificationRing m = modification_ring(centre_args(c, span), c.names);
    Outcome o;
    o.result = presentation_record(m);
    o.result["relations_vanish"] = relations_vanish(m);
    o.checks.emplace_back("relations", m.relations);
    return o;
  }

  Outcome cmd_proper(const Command& c, Span span) {
    ModificationCentre centre = centre_args(c, span);
    ProperTransform p = proper_transform(centre, transform_presentation(centre, c.names));
    Outcome o;
    o.result["ring"] = p.rees.rees_ring.to_string();
    o.result["lift"] = p.lift.to_string();
    o.result["ideal"] = p.ideal.to_string();
    o.result["saturated"] = p.saturated.to_string();
    o.checks.emplace_back("ideal", p.ideal);
    o.checks.emplace_back("saturated", p.saturated);
    return o;
  }

  Outcome cmd_strict(const Command& c, Span span) {
    ModificationCentre centre = centre_args(c, span);
    StrictTransform s = strict_transform(centre, transform_presentation(centre, c.names));
    Outcome o;
    o.result["ring"] = s.rees.rees_ring.to_string();
    o.result["ideal"] = s.ideal.to_string();
    o.result["saturated"] = s.saturated.to_string();
    o.checks.emplace_back("ideal", s.ideal);
    o.checks.emplace_back("saturated", s.saturated);
    return o;
  }

  Outcome cmd_transforms_equal(const Command& c, Span span) {
    TransformPair t = transforms_equal(centre_args(c, span), c.names);
    Outcome o;
    o.result["equal"] = t.equal_as_subschemes;
    o.result["proper"] = t.proper.saturated.to_string();
    o.result["strict"] = t.strict.saturated.to_string();
    o.checks.emplace_back("equal", Json(t.equal_as_subschemes));
    o.checks.emplace_back("proper", t.proper.saturated);
    o.checks.emplace_back("strict", t.strict.saturated);
    return o;
  }

  Outcome cmd_minors(const Command& c, Span span) {
    arity(c, span, 1, 1, "(sequence)");
    PolyRing r = ring_for(c, span);
    std::vector<Polynomial> seq = eval_ideal(c.args[0], r).generators();
    Ideal det = determinantal_ideal(r, seq, c.names);
    bool regular = is_regular_sequence(seq).regular;
    Ideal kernel = rees_presentation(Ideal(r, seq), c.names).kernel;
    Outcome o;
    o.result["ring"] = det.ring().to_string();
    o.result["minors"] = det.to_string();
    o.result["regular_sequence"] = regular;
    o.result["equals_rees_kernel"] = det == kernel;
    o.checks.emplace_back("minors", det);
    o.checks.emplace_back("regular_sequence", Json(regular));
    return o;
  }

  static std::uint64_t literal(const Expr& e, const char* what) {
    if (e.kind != Expr::Kind::Number) throw RunError{e.span, std::string("expected ") + what, {}};
    unsigned v = exponent(e);
    return v;
  }

  Outcome cmd_member(const Command& c, Span span) {
    arity(c, span, 2, 4, "(centre, h) or (centre, p, k[, n_max])");
    const ModificationCentre& centre = named<ModificationCentre>(c.args[0], "a centre");
    Membership m;
    if (c.args.size() == 2) {
      Fraction h = eval(c.args[1], centre.ring());
      m = membership_in_localized_modification(centre, h, Polynomial::constant(centre.ring(), 1),
                                               options_.n_max);
    } else {
      Polynomial p = eval_poly(c.args[1], centre.ring());
      auto k = static_cast<unsigned>(literal(c.args[2], "an exponent k"));
      unsigned n_max = c.args.size() == 4
                           ? static_cast<unsigned>(literal(c.args[3], "a bound n_max"))
                           : options_.n_max;
      m = membership_in_modification(centre, p, k, n_max);
    }
    Outcome o;
    o.result["summary"] = m.member ? "member at N=" + std::to_string(m.n)
                                   : "not a member up to N=" + std::to_string(m.n);
    o.result["member"] = m.member;
    o.result["N"] = m.n;
    o.checks.emplace_back("member", Json(m.member));
    o.checks.emplace_back("N", Json(m.n));
    return o;
  }

  Outcome cmd_denominators(const Command& c, Span span) {
    arity(c, span, 1, 1, "(fractional ideal)");
    PolyRing r = ring_for(c, span);
    Ideal f = denominator_ideal(eval_fractional(c.args[0], r));
    Outcome o;
    o.result["denominator_ideal"] = f.to_string();
    o.checks.emplace_back("denominator_ideal", f);
    return o;
  }

  Outcome cmd_centre_from(const Command& c, Span span) {
    arity(c, span, 2, 2, "(fractional ideal, denominator)");
    PolyRing r = ring_for(c, span);
    ModificationCentre centre =
        centre_from_fractional(eval_fractional(c.args[0], r), eval_poly(c.args[1], r));
    Outcome o;
    o.result["ideal"] = centre.ideal().to_string();
    o.result["f"] = centre.divisor_element().to_string();
    o.checks.emplace_back("ideal", centre.ideal());
    return o;
  }

  const DivisorValue& divisor_arg(const Command& c, std::size_t at) const {
    const auto& d = named<DivisorValue>(c.args[at], "a divisor");
    if (d.atlas != c.args[0].text) {
      throw RunError{c.args[at].span, "divisor lives on atlas '" + d.atlas + "'", {}};
    }
    return d;
  }

  const SheafValue& sheaf_arg(const Command& c, std::size_t at) const {
    const auto& s = named<SheafValue>(c.args[at], "an ideal sheaf");
    if (s.atlas != c.args[0].text) {
      throw RunError{c.args[at].span, "sheaf lives on atlas '" + s.atlas + "'", {}};
    }
    return s;
  }

  static void global_checks(const GlobalModification& g, Outcome& o) {
    o.checks.emplace_back("consistent", Json(g.consistent()));
    for (std::size_t i = 0; i < g.charts.size(); ++i) {
      o.checks.emplace_back("chart " + std::to_string(i), g.charts[i].relations);
    }
  }

  Outcome cmd_modify_global(const Command& c, Span span) {
    arity(c, span, 3, 3, "(atlas, divisor, sheaf)");
    const auto& atlas = named<ChartAtlas>(c.args[0], "an atlas");
    GlobalModification g =
        modify_global(atlas, divisor_arg(c, 1).divisor, sheaf_arg(c, 2).sheaf, options_.n_max);
    Outcome o;
    o.result = global_record(g);
    global_checks(g, o);
    return o;
  }

  Outcome cmd_complement(const Command& c, Span span) {
    arity(c, span, 2, 2, "(atlas, divisor)");
    const auto& atlas = named<ChartAtlas>(c.args[0], "an atlas");
    const CartierDivisor& d = divisor_arg(c, 1).divisor;
    GlobalModification g = complement_of_divisor(atlas, d, options_.n_max);
    Outcome o;
    o.result = global_record(g);
    Json inverses = Json::array();
    for (std::size_t i = 0; i < atlas.size(); ++i) {
      const PolyRing& r = atlas.charts()[i];
      Membership m = membership_in_modification(
          ModificationCentre(Ideal::unit(r), d.local_equations[i]), Polynomial::constant(r, 1), 1,
          options_.n_max);
      Json e;
      e["chart"] = i;
      e["summary"] = Fraction(Polynomial::constant(r, 1), d.local_equations[i]).to_string() + " " +
                     (m.member ? "member at N=" : "not a member up to N=") + std::to_string(m.n);
      inverses.push_back(std::move(e));
    }
    o.result["inverse_of_local_equation"] = std::move(inverses);
    global_checks(g, o);
    return o;
  }

  Outcome cmd_validate(const Command& c, Span span) {
    arity(c, span, 1, 3, "(atlas[, divisor[, sheaf]])");
    const auto& atlas = named<ChartAtlas>(c.args[0], "an atlas");
    ValidationReport r = validate_atlas(atlas);
    if (r.ok() && c.args.size() >= 2) r = validate_divisor(atlas, divisor_arg(c, 1).divisor);
    if (r.ok() && c.args.size() == 3) {
      r = validate_sheaf(atlas, divisor_arg(c, 1).divisor, sheaf_arg(c, 2).sheaf);
    }
    Outcome o;
    o.result = report_record(r);
    o.checks.emplace_back("valid", Json(r.ok()));
    return o;
  }
};

// Maps a QQ ideal into the GF(p) ring of its shadow and compares reduced bases.
std::optional<std::string> compare(const Check& main, const Check& shadow) {
  if (main.index() != shadow.index()) return "kind differs";
  if (auto* j = std::get_if<Json>(&main)) {
    if (*j != std::get<Json>(shadow)) return j->dump() + " vs " + std::get<Json>(shadow).dump();
    return std::nullopt;
  }
  const Ideal& a = std::get<Ideal>(main);
  const Ideal& b = std::get<Ideal>(shadow);
  std::vector<Polynomial> reduced;
  for (const auto& g : a.groebner().elements()) reduced.push_back(map_by_name(g, b.ring()));
  if (!(Ideal(b.ring(), std::move(reduced)) == b)) return "ideals differ";
  return std::nullopt;
}

std::string timing_string(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

Fraction evaluate(std::string_view expression, const PolyRing& ring) {
  Expr e = parse_expression(expression);
  RunOptions options;
  Interpreter in(options, std::nullopt);
  try {
    return in.eval_public(e, ring);
  } catch (const RunError& err) {
    throw std::invalid_argument(err.message);
  }
}

bool RunResult::has_errors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

RunResult execute(const Script& script, const RunOptions& options) {
  Interpreter main(options, std::nullopt);
  RunResult result = main.run(script);
  if (!options.field_check) return result;

  std::string label = "GF(" + std::to_string(*options.field_check) + ")";
  Interpreter shadow(options, Field::prime(*options.field_check));
  shadow.run(script);
  for (auto& out : result.outputs) {
    const Checks* mine = main.checks_for(out.statement);
    const Checks* theirs = shadow.checks_for(out.statement);
    std::string verdict = "agrees over " + label;
    if (!theirs || theirs->size() != mine->size()) {
      verdict = "not computed over " + label;
    } else {
      for (std::size_t k = 0; k < mine->size(); ++k) {
        std::optional<std::string> diff;
        try {
          diff = compare((*mine)[k].second, (*theirs)[k].second);
        } catch (const std::exception& e) {
          diff = e.what();
        }
        if (diff) {
          verdict = "differs over " + label + " in " + (*mine)[k].first + ": " + *diff;
          break;
        }
      }
    }
    if (verdict.rfind("agrees", 0) != 0) {
      const Statement& st = script.statements[out.statement];
      result.diagnostics.push_back({Severity::Warning, st.span, out.command + ": " + verdict, {}});
    }
    out.result["field_check"] = verdict;
  }
  return result;
}

std::string render_outputs(const RunResult& run, const RunOptions& options) {
  if (options.json) {
    Json all = Json::array();
    for (const auto& o : run.outputs) {
      Json rec;
      rec["command"] = o.command;
      rec["inputs"] = o.inputs;
      rec["result"] = o.result;
      rec["timing_ms"] = options.timing ? Json(std::stod(timing_string(o.timing_ms))) : Json();
      all.push_back(std::move(rec));
    }
    return all.dump(2) + "\n";
  }
  std::string out;
  for (const auto& o : run.outputs) {
    if (!out.empty()) out += "\n";
    out += o.command + "\n" + render_text(o.result, 2);
    if (options.timing) out += "  time_ms: " + timing_string(o.timing_ms) + "\n";
  }
  return out;
}

int run_source(std::string_view source, std::string_view file, const RunOptions& options,
               std::ostream& out, std::ostream& err) {
  ParseResult parsed = parse(source);
  RunResult run = execute(parsed.script, options);
  std::vector<Diagnostic> diags = parsed.diagnostics;
  diags.insert(diags.end(), run.diagnostics.begin(), run.diagnostics.end());
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.span.line, a.span.column) < std::tie(b.span.line, b.span.column);
  });
  out << render_outputs(run, options);
  for (const auto& d : diags) err << format(d, file);
  if (run.internal_error) return 2;
  bool errors = !parsed.ok() || run.has_errors();
  return errors ? 1 : 0;
}

}  // namespace reesmod::script
