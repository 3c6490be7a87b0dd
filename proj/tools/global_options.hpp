#pragma once

#include <CLI11.hpp>

#include "cli_util.hpp"

namespace hitforge::cli {

/// --seed, --max-prime, --jobs, --out, --emit-trace; accepted before or after
/// the subcommand.
inline void add_global_options(CLI::App& app, GlobalOptions& g) {
  app.fallthrough();
  app.add_option("--seed", g.seed, "seed for randomized searches");
  app.add_option("--max-prime", g.max_prime, "largest prime a search may try");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_option("--out", g.out, "certificate output file (default stdout)");
  app.add_option("--emit-trace", g.emit_trace, "write the search log to this file");
}

/// Parses and dispatches; parse errors map to exit code 4.
inline int run_app(CLI::App& app, int argc, char** argv, int& exit_code) {
  app.require_subcommand(1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  return exit_code;
}

}  // namespace hitforge::cli
