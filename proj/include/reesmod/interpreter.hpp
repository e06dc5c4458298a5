#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reesmod/modification.hpp"
#include "reesmod/presentation.hpp"
#include "reesmod/script.hpp"

namespace reesmod::script {

struct RunOptions {
  bool json = false;
  bool timing = true;
  unsigned n_max = kDefaultMembershipBound;
  /// Recompute every command with QQ replaced by GF(p) and compare.
  std::optional<std::uint64_t> field_check;
};

struct CommandOutput {
  std::size_t statement = 0;
  std::string command;
  Json inputs;
  Json result;
  double timing_ms = 0;
};

struct RunResult {
  std::vector<CommandOutput> outputs;
  std::vector<Diagnostic> diagnostics;
  bool internal_error = false;

  bool has_errors() const;
};

/// Evaluates an expression over `ring` using only its variables. Throws
/// std::invalid_argument on syntax errors or unknown names.
Fraction evaluate(std::string_view expression, const PolyRing& ring);

/// Runs every statement in order. A failing statement produces a diagnostic
/// and leaves its name unbound; later statements still run.
RunResult execute(const Script& script, const RunOptions& options);

/// Text blocks, or a JSON array of {command, inputs, result, timing_ms}.
std::string render_outputs(const RunResult& run, const RunOptions& options);

/// Parse, execute and print. Returns 0 on success, 1 when any error
/// diagnostic was produced, 2 on an internal error.
int run_source(std::string_view source, std::string_view file, const RunOptions& options,
               std::ostream& out, std::ostream& err);

}  // namespace reesmod::script
