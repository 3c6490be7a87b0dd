#pragma once

#include <CLI11.hpp>

#include "cli_util.hpp"

namespace hitforge::cli {

/// verify, verify-rec and ell-verify.  Each sets `exit_code` when it runs.
void add_verify_commands(CLI::App& app, int& exit_code);

}  // namespace hitforge::cli
