#include "reesmod/script.hpp"

namespace reesmod::script {

namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + render(e) + ")" : render(e); }

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::string list(const std::vector<Expr>& items) {
  std::vector<std::string> parts;
  for (const auto& e : items) parts.push_back(render(e));
  return "(" + join(parts) + ")";
}

std::string render(const FieldSpec& f) {
  return f.prime ? "GF(" + std::to_string(*f.prime) + ")" : "QQ";
}

std::string render(const RingSpec& r) {
  std::string out = render(r.field) + "[" + join(r.vars) + "]";
  if (r.order) {
    out += " with order " + r.order->kind;
    if (!r.order->params.empty()) {
      std::vector<std::string> ps;
      for (auto p : r.order->params) ps.push_back(std::to_string(p));
      out += "(" + join(ps) + ")";
    }
  }
  return out;
}

}  // namespace

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Name:
      return e.text;
    case Expr::Kind::Tuple:
      return list(e.args);
    case Expr::Kind::Neg:
      return "-" + wrap(e.args[0], precedence(e.args[0]) <= 3);
    case Expr::Kind::Pow:
      return wrap(e.args[0], precedence(e.args[0]) < 5) + "^" + e.args[1].text;
    default: {
      // Left-associative: the right operand needs parentheses at equal precedence.
      const char* op = e.kind == Expr::Kind::Add   ? " + "
                       : e.kind == Expr::Kind::Sub ? " - "
                       : e.kind == Expr::Kind::Mul ? "*"
                                                   : "/";
      int p = precedence(e);
      return wrap(e.args[0], precedence(e.args[0]) < p) + op +
             wrap(e.args[1], precedence(e.args[1]) <= p || e.args[1].kind == Expr::Kind::Neg);
    }
  }
}

std::string render(const Command& c) {
  std::string out = c.name + list(c.args);
  if (!c.names.empty()) out += " [" + join(c.names) + "]";
  return out;
}

std::string render(const Statement& s) {
  struct Visitor {
    std::string operator()(const RingDecl& d) const {
      return "ring " + d.name + " = " + render(d.ring) + ";";
    }
    std::string operator()(const ValueDecl& d) const {
      switch (d.kind) {
        case ValueDecl::Kind::Poly:
          return "poly " + d.name + " = " + render(d.items[0]) + ";";
        case ValueDecl::Kind::Ideal:
          return "ideal " + d.name + " = " + list(d.items) + ";";
        case ValueDecl::Kind::Frac:
          return "frac " + d.name + " = " + list(d.items) + ";";
        case ValueDecl::Kind::Centre:
          return "centre " + d.name + " = " + list(d.items) + ";";
      }
      return {};
    }
    std::string operator()(const AtlasDecl& a) const {
      std::string out = "atlas " + a.name + " = {\n";
      for (const auto& c : a.charts) out += "  chart " + render(c) + ";\n";
      for (const auto& o : a.overlaps) {
        std::vector<std::string> maps;
        for (const auto& [v, e] : o.images) maps.push_back(v + " = " + render(e));
        out += "  overlap " + std::to_string(o.i) + " " + std::to_string(o.j) + " at " +
               render(o.g) + " map " + join(maps) + ";\n";
      }
      return out + "};";
    }
    std::string operator()(const ChartDataDecl& d) const {
      return std::string(d.kind == ChartDataDecl::Kind::Divisor ? "divisor " : "sheaf ") + d.name +
             " on " + d.atlas + " = " + list(d.entries) + ";";
    }
    std::string operator()(const Command& c) const { return "show " + render(c) + ";"; }
  };
  return std::visit(Visitor{}, s.node);
}

std::string render(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) out += render(st) + "\n";
  return out;
}

}  // namespace reesmod::script
