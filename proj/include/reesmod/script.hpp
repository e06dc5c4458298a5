#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace reesmod::script {

/// 1-based line and column. Spans never take part in structural comparison.
struct Span {
  unsigned line = 0;
  unsigned column = 0;
  unsigned length = 0;
  bool operator==(const Span&) const { return true; }
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  Span span;
  std::string message;
  std::optional<std::string> hint;
};

/// `file:line:col: error: message` plus an optional hint line.
std::string format(const Diagnostic& d, std::string_view file);

struct Expr {
  enum class Kind { Number, Name, Neg, Add, Sub, Mul, Div, Pow, Tuple };
  Kind kind = Kind::Number;
  /// Digits for Number, identifier for Name.
  std::string text;
  std::vector<Expr> args;
  Span span;
  bool operator==(const Expr&) const = default;
};

struct FieldSpec {
  /// Empty for QQ.
  std::optional<std::uint64_t> prime;
  bool operator==(const FieldSpec&) const = default;
};

struct OrderSpec {
  /// lex, grevlex, block or weighted.
  std::string kind;
  std::vector<std::uint64_t> params;
  bool operator==(const OrderSpec&) const = default;
};

struct RingSpec {
  FieldSpec field;
  std::vector<std::string> vars;
  std::optional<OrderSpec> order;
  bool operator==(const RingSpec&) const = default;
};

struct RingDecl {
  std::string name;
  RingSpec ring;
  bool operator==(const RingDecl&) const = default;
};

/// poly (one item), ideal and frac (item lists), centre (ideal, element).
struct ValueDecl {
  enum class Kind { Poly, Ideal, Frac, Centre };
  Kind kind = Kind::Poly;
  std::string name;
  std::vector<Expr> items;
  bool operator==(const ValueDecl&) const = default;
};

struct OverlapDecl {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  Expr g;
  std::vector<std::pair<std::string, Expr>> images;
  Span span;
  bool operator==(const OverlapDecl&) const = default;
};

struct AtlasDecl {
  std::string name;
  std::vector<RingSpec> charts;
  std::vector<OverlapDecl> overlaps;
  bool operator==(const AtlasDecl&) const = default;
};

/// `divisor D on X = (...)` or `sheaf S on X = (...)`, one entry per chart.
struct ChartDataDecl {
  enum class Kind { Divisor, Sheaf };
  Kind kind = Kind::Divisor;
  std::string name;
  std::string atlas;
  std::vector<Expr> entries;
  bool operator==(const ChartDataDecl&) const = default;
};

struct Command {
  std::string name;
  std::vector<Expr> args;
  /// Optional Rees variable names, `[u, v]` after the call.
  std::vector<std::string> names;
  bool operator==(const Command&) const = default;
};

struct Statement {
  std::variant<RingDecl, ValueDecl, AtlasDecl, ChartDataDecl, Command> node;
  Span span;
  /// The declared name, or the command name.
  Span name_span;
  bool operator==(const Statement&) const = default;
};

struct Script {
  std::vector<Statement> statements;
  bool operator==(const Script&) const = default;
};

struct ParseResult {
  Script script;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

/// Statements with errors are dropped from the script; parsing resumes
/// after the next ';'.
ParseResult parse(std::string_view source);

/// A single expression such as `x^2 - 3/2*y`; throws std::invalid_argument
/// with the diagnostic message on a syntax error.
Expr parse_expression(std::string_view source);

/// Canonical source text, one statement per line.
std::string render(const Script& s);
std::string render(const Statement& s);
std::string render(const Expr& e);
std::string render(const Command& c);

}  // namespace reesmod::script
