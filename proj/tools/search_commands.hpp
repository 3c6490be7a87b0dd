#pragma once

#include <CLI11.hpp>

#include "cli_util.hpp"

namespace hitforge::cli {

/// pb, torus, rec, ell and kron.  Each sets `exit_code` when it runs.
void add_search_commands(CLI::App& app, const GlobalOptions& g, int& exit_code);

}  // namespace hitforge::cli
