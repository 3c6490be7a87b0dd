#include "global_options.hpp"
#include "search_commands.hpp"
#include "verify_commands.hpp"

int main(int argc, char** argv) {
  using namespace hitforge::cli;
  CLI::App app{"forge: finite-field certificates for specializations of covers"};
  GlobalOptions g;
  int exit_code = kOk;
  add_global_options(app, g);
  add_search_commands(app, g, exit_code);
  add_verify_commands(app, exit_code);
  return run_app(app, argc, argv, exit_code);
}
