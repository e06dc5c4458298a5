// reesmod: batch runner for affine modification scripts.

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "reesmod/interpreter.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Rees algebras, affine modifications and their transforms"};
  app.require_subcommand(1);
  CLI::App* run = app.add_subcommand("run", "Execute a script");

  std::string file;
  std::string field_check;
  reesmod::script::RunOptions options;
  bool no_timing = false;
  run->add_option("file", file, "Script to execute")->required();
  run->add_flag("--json", options.json, "Emit a JSON array instead of text");
  run->add_flag("--no-timing", no_timing, "Omit timings (for golden comparisons)");
  run->add_option("--nmax", options.n_max, "Default bound for membership searches")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--field-check", field_check, "Cross-check every command over GF(p)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  options.timing = !no_timing;

  if (!field_check.empty()) {
    std::smatch m;
    static const std::regex gf(R"(GF\((\d+)\))");
    if (!std::regex_match(field_check, m, gf)) {
      std::cerr << "error: --field-check expects GF(p), got '" << field_check << "'\n";
      return 1;
    }
    std::uint64_t p = std::stoull(m[1]);
    if (p >= (std::uint64_t(1) << 31) || !reesmod::is_prime(p)) {
      std::cerr << "error: --field-check needs a prime below 2^31\n";
      return 1;
    }
    options.field_check = p;
  }

  std::ifstream in(file, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << file << "'\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return reesmod::script::run_source(buf.str(), file, options, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
