#include "verify_commands.hpp"

#include <iostream>
#include <memory>

#include "hitforge/cert_verify.hpp"

namespace hitforge::cli {

namespace {

struct VerifyArgs {
  std::string cert;
  std::vector<std::string> covers;
  std::string xi, tau;
  std::optional<std::uint64_t> exact_bound;
};

int run_verify(const VerifyArgs& a, std::optional<CertKind> required) {
  const Envelope env = load(read_file(a.cert));
  if (required && env.kind() != *required) {
    throw InputError(a.cert + " is a " + to_string(env.kind()) + " certificate, expected " + to_string(*required));
  }
  VerifyInputs in;
  in.covers = read_covers(a.covers);
  if (!a.xi.empty()) in.base = make_base(a.xi, a.tau);
  in.exact_bound = a.exact_bound;
  std::cout << to_string(env.kind()) << " certificate, exact bound "
            << in.exact_bound.value_or(default_exact_bound(env.kind())) << "\n";
  return report_verdict(verify_envelope(env, in));
}

CLI::App* add_one(CLI::App& app, const std::string& name, const std::string& help, std::optional<CertKind> kind,
                  bool takes_inputs, int& exit_code) {
  auto args = std::make_shared<VerifyArgs>();
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("--cert", args->cert, "certificate JSON")->required()->check(CLI::ExistingFile);
  if (takes_inputs) {
    sub->add_option("--cover", args->covers, "cover polynomial files, in certificate order")->check(CLI::ExistingFile);
    sub->add_option("--xi", args->xi, "base point, e.g. 2,3");
    sub->add_option("--tau", args->tau, "additive coordinate of the base point");
  }
  sub->add_option("--exact-bound", args->exact_bound, "exact check for certified n up to this bound");
  sub->callback([args, kind, &exit_code] { exit_code = guarded([&] { return run_verify(*args, kind); }); });
  return sub;
}

}  // namespace

void add_verify_commands(CLI::App& app, int& exit_code) {
  add_one(app, "verify", "verify any certificate (torus certificates need --cover and --xi)", std::nullopt, true,
          exit_code);
  add_one(app, "verify-rec", "verify a recurrence certificate", CertKind::Recurrence, false, exit_code);
  add_one(app, "ell-verify", "verify an elliptic certificate", CertKind::Elliptic, false, exit_code);
}

}  // namespace hitforge::cli
