#include <cctype>
#include <charconv>
#include <stdexcept>

#include "reesmod/script.hpp"

namespace reesmod::script {

namespace {

enum class Tok { Name, Number, Punct, Bad, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Span span;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Bad:
      return "unexpected character '" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  unsigned line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.span = {line, col, 1};
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::Name;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Number;
    } else if (std::string_view("=;,()[]{}+-*/^").find(c) != std::string_view::npos) {
      j = i + 1;
      t.kind = Tok::Punct;
    } else {
      // Keep multi-byte UTF-8 sequences together in the message.
      j = i + 1;
      while (j < src.size() && (static_cast<unsigned char>(src[j]) & 0xC0) == 0x80) ++j;
      t.kind = Tok::Bad;
    }
    t.text = std::string(src.substr(i, j - i));
    t.span.length = static_cast<unsigned>(j - i);
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.span = {line, col, 0};
  out.push_back(end);
  return out;
}

struct SyntaxError {
  Span span;
  std::string message;
  std::optional<std::string> hint;
};

Span join(Span a, Span b) {
  if (a.line != b.line) return a;
  return {a.line, a.column, b.column + b.length - a.column};
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr single_expression() {
    try {
      Expr e = expr();
      if (peek().kind != Tok::End) fail("end of expression");
      return e;
    } catch (const SyntaxError& e) {
      throw std::invalid_argument(std::to_string(e.span.column) + ": " + e.message);
    }
  }

  ParseResult run() {
    ParseResult r;
    while (peek().kind != Tok::End) {
      std::size_t start = pos_;
      depth_ = 0;
      try {
        r.script.statements.push_back(statement());
      } catch (const SyntaxError& e) {
        r.diagnostics.push_back({Severity::Error, e.span, e.message, e.hint});
        recover(start);
      }
    }
    return r;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    if (t.kind == Tok::Punct && t.text == "{") ++depth_;
    if (t.kind == Tok::Punct && t.text == "}") --depth_;
    return t;
  }
  bool is(const char* punct) const { return peek().kind == Tok::Punct && peek().text == punct; }
  bool is_word(const char* w) const { return peek().kind == Tok::Name && peek().text == w; }

  [[noreturn]] void fail(const std::string& expected, std::optional<std::string> hint = {}) {
    throw SyntaxError{peek().span, "expected " + expected + ", found " + describe(peek()),
                      std::move(hint)};
  }
  const Token& expect(const char* punct) {
    if (!is(punct)) fail(std::string("'") + punct + "'");
    return take();
  }
  void expect_word(const char* w) {
    if (!is_word(w)) fail(std::string("'") + w + "'");
    take();
  }
  const Token& name(const char* what) {
    if (peek().kind != Tok::Name) fail(what);
    return take();
  }
  std::uint64_t integer(const char* what) {
    if (peek().kind != Tok::Number) fail(what);
    const Token& t = take();
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) throw SyntaxError{t.span, "integer literal out of range", {}};
    return v;
  }

  // Skips past the ';' closing the failed statement, balancing braces so an
  // error inside an atlas block does not resume mid-block.
  void recover(std::size_t start) {
    if (pos_ == start) take();
    while (peek().kind != Tok::End) {
      if (is(";") && depth_ <= 0) {
        take();
        return;
      }
      take();
    }
  }

  Statement statement() {
    Span start = peek().span;
    Statement s;
    if (is_word("ring")) {
      take();
      const Token& n = name("ring name");
      s.name_span = n.span;
      RingDecl d{n.text, {}};
      expect("=");
      d.ring = ring_spec();
      s.node = std::move(d);
    } else if (is_word("poly") || is_word("ideal") || is_word("frac") || is_word("centre")) {
      std::string kw = take().text;
      const Token& n = name("name");
      s.name_span = n.span;
      ValueDecl d;
      d.name = n.text;
      expect("=");
      if (kw == "poly") {
        d.kind = ValueDecl::Kind::Poly;
        d.items.push_back(expr());
      } else {
        d.kind = kw == "ideal" ? ValueDecl::Kind::Ideal
                 : kw == "frac" ? ValueDecl::Kind::Frac
                                : ValueDecl::Kind::Centre;
        d.items = paren_list();
        if (d.kind == ValueDecl::Kind::Centre && d.items.size() != 2) {
          throw SyntaxError{s.name_span, "a centre is a pair (ideal, element)", {}};
        }
      }
      s.node = std::move(d);
    } else if (is_word("atlas")) {
      take();
      const Token& n = name("atlas name");
      s.name_span = n.span;
      s.node = atlas(n.text);
    } else if (is_word("divisor") || is_word("sheaf")) {
      ChartDataDecl d;
      d.kind = take().text == "divisor" ? ChartDataDecl::Kind::Divisor : ChartDataDecl::Kind::Sheaf;
      const Token& n = name("name");
      s.name_span = n.span;
      d.name = n.text;
      expect_word("on");
      d.atlas = name("atlas name").text;
      expect("=");
      d.entries = paren_list();
      s.node = std::move(d);
    } else if (is_word("show")) {
      take();
      const Token& n = name("command name");
      s.name_span = n.span;
      Command c;
      c.name = n.text;
      c.args = paren_list();
      if (is("[")) c.names = name_list();
      s.node = std::move(c);
    } else {
      fail("a declaration or 'show'",
           "statements start with ring, poly, ideal, frac, centre, atlas, divisor, sheaf or show");
    }
    const Token& semi = expect(";");
    s.span = join(start, semi.span);
    return s;
  }

  FieldSpec field() {
    if (is_word("QQ")) {
      take();
      return {};
    }
    if (is_word("GF")) {
      take();
      expect("(");
      std::uint64_t p = integer("a prime");
      expect(")");
      return {p};
    }
    fail("a field", "use QQ or GF(p)");
  }

  std::vector<std::string> name_list() {
    expect("[");
    std::vector<std::string> out;
    if (!is("]")) {
      out.push_back(name("variable name").text);
      while (is(",")) {
        take();
        out.push_back(name("variable name").text);
      }
    }
    expect("]");
    return out;
  }

  RingSpec ring_spec() {
    RingSpec r;
    r.field = field();
    r.vars = name_list();
    if (is_word("with")) {
      take();
      expect_word("order");
      OrderSpec o;
      o.kind = name("a monomial order").text;
      if (o.kind == "block" || o.kind == "weighted") {
        expect("(");
        o.params.push_back(integer("an integer"));
        while (is(",")) {
          take();
          o.params.push_back(integer("an integer"));
        }
        expect(")");
      } else if (o.kind != "lex" && o.kind != "grevlex") {
        throw SyntaxError{toks_[pos_ - 1].span, "unknown monomial order '" + o.kind + "'",
                          "orders are lex, grevlex, block(k) and weighted(w1, ...)"};
      }
      r.order = std::move(o);
    }
    return r;
  }

  AtlasDecl atlas(std::string n) {
    AtlasDecl a;
    a.name = std::move(n);
    expect("=");
    expect("{");
    while (!is("}")) {
      if (is_word("chart")) {
        take();
        a.charts.push_back(ring_spec());
      } else if (is_word("overlap")) {
        OverlapDecl o;
        Span start = take().span;
        o.i = integer("a chart index");
        o.j = integer("a chart index");
        expect_word("at");
        o.g = expr();
        expect_word("map");
        do {
          if (!o.images.empty()) take();
          std::string var = name("variable name").text;
          expect("=");
          o.images.emplace_back(var, expr());
        } while (is(","));
        o.span = join(start, peek().span);
        a.overlaps.push_back(std::move(o));
      } else {
        fail("'chart', 'overlap' or '}'");
      }
      expect(";");
    }
    expect("}");
    return a;
  }

  // '(' [expr {',' expr}] ')'
  std::vector<Expr> paren_list() {
    expect("(");
    std::vector<Expr> out;
    if (!is(")")) {
      out.push_back(expr());
      while (is(",")) {
        take();
        out.push_back(expr());
      }
    }
    expect(")");
    return out;
  }

  static Expr node(Expr::Kind k, std::vector<Expr> args, Span span) {
    Expr e;
    e.kind = k;
    e.args = std::move(args);
    e.span = span;
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (is("+") || is("-")) {
      auto k = take().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
      Expr rhs = term();
      Span sp = join(lhs.span, rhs.span);
      lhs = node(k, {std::move(lhs), std::move(rhs)}, sp);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (is("*") || is("/")) {
      auto k = take().text == "*" ? Expr::Kind::Mul : Expr::Kind::Div;
      Expr rhs = unary();
      Span sp = join(lhs.span, rhs.span);
      lhs = node(k, {std::move(lhs), std::move(rhs)}, sp);
    }
    return lhs;
  }

  Expr unary() {
    if (is("-")) {
      Span start = take().span;
      Expr operand = unary();
      Span sp = join(start, operand.span);
      return node(Expr::Kind::Neg, {std::move(operand)}, sp);
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (is("^")) {
      take();
      if (peek().kind != Tok::Number) fail("a non-negative integer exponent");
      const Token& t = take();
      Expr ex;
      ex.kind = Expr::Kind::Number;
      ex.text = t.text;
      ex.span = t.span;
      Span sp = join(base.span, t.span);
      return node(Expr::Kind::Pow, {std::move(base), std::move(ex)}, sp);
    }
    return base;
  }

  Expr atom() {
    if (peek().kind == Tok::Number || peek().kind == Tok::Name) {
      const Token& t = take();
      Expr e;
      e.kind = t.kind == Tok::Number ? Expr::Kind::Number : Expr::Kind::Name;
      e.text = t.text;
      e.span = t.span;
      return e;
    }
    if (is("(")) {
      Span start = peek().span;
      // A parenthesized single expression is grouping; anything else is a tuple.
      std::vector<Expr> items = paren_list();
      Span sp = join(start, toks_[pos_ - 1].span);
      if (items.size() == 1) {
        items[0].span = sp;
        return std::move(items[0]);
      }
      return node(Expr::Kind::Tuple, std::move(items), sp);
    }
    fail("an expression");
  }
};

}  // namespace

std::string format(const Diagnostic& d, std::string_view file) {
  std::string out = std::string(file) + ":" + std::to_string(d.span.line) + ":" +
                    std::to_string(d.span.column) + ": " +
                    (d.severity == Severity::Error ? "error" : "warning") + ": " + d.message + "\n";
  if (d.hint) out += "  hint: " + *d.hint + "\n";
  return out;
}

ParseResult parse(std::string_view source) { return Parser(lex(source)).run(); }

Expr parse_expression(std::string_view source) { return Parser(lex(source)).single_expression(); }

}  // namespace reesmod::script
