// Verifier-only front end: links hitforge_verify and never the search code.

#include "global_options.hpp"
#include "verify_commands.hpp"

int main(int argc, char** argv) {
  using namespace hitforge::cli;
  CLI::App app{"forge-verify: check forge certificates"};
  GlobalOptions g;
  int exit_code = kOk;
  add_global_options(app, g);
  add_verify_commands(app, exit_code);
  return run_app(app, argc, argv, exit_code);
}
