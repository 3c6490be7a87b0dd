#include "search_commands.hpp"

#include <iostream>
#include <memory>
#include <sstream>

#include "hitforge/digest.hpp"

namespace hitforge::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<std::uint64_t>& xs, std::size_t limit = 12) {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) s << (i ? "," : "") << xs[i];
  if (xs.size() > limit) s << ",... (" << xs.size() << " total)";
  return s.str();
}

FiberMode mode_arg(const std::string& s) {
  if (s != "noroot" && s != "irred") throw InputError("--mode must be noroot or irred");
  return fiber_mode_from_string(s);
}

int finish(const GlobalOptions& g, Envelope env, const SearchTrace& trace, Clock::time_point start) {
  if (g.seed) env.seed = *g.seed;
  write_output(g.out, save(env));
  emit_trace(g, trace, Clock::now() - start);
  return kOk;
}

int exhausted(const GlobalOptions& g, const Exhausted& ex, Clock::time_point start) {
  std::cerr << "exhausted after " << ex.trace.primes_tried << " primes (strategy " << ex.trace.strategy << ")\n";
  emit_trace(g, ex.trace, Clock::now() - start);
  return kNoResult;
}

std::string describe(const PBVerdict& v) {
  if (std::holds_alternative<CertifiedPB>(v)) return "CertifiedPB";
  if (const auto* np = std::get_if<CertifiedNotPB>(&v)) {
    if (const auto* f = std::get_if<ExplicitFactor>(&np->evidence)) {
      return "CertifiedNotPB: pullback at m = " + std::to_string(f->m) + " has the factor " + f->factor.str();
    }
    return "CertifiedNotPB: discriminant is a constant times a square";
  }
  return "Unknown: " + std::get<Unknown>(v).reason;
}

// ---- pb --------------------------------------------------------------------

struct PbArgs {
  std::string cover;
  bool isogeny = false;
};

int run_pb(const GlobalOptions& g, const PbArgs& a) {
  const auto start = Clock::now();
  const CoverSpec c = make_cover(read_poly_file(a.cover));
  PBOptions opts;
  if (g.seed) opts.search.seed = *g.seed;
  if (g.max_prime) opts.search.max_prime = *g.max_prime;
  const PBVerdict v = pb_check(c, opts);
  std::cerr << c.f.str() << ": " << describe(v) << "\n";
  if (a.isogeny && std::holds_alternative<CertifiedNotPB>(v)) {
    const auto rep = isogeny_factor_report(c, opts);
    std::cerr << "isogeny factor at m = " << rep.m << ": " << rep.factor.str() << " (residual degree "
              << rep.residual_degree << ")\n";
  }
  SearchTrace trace;
  trace.strategy = "pb-gate";
  finish(g, make_envelope(PBRecord{c, v}), trace, start);
  return std::holds_alternative<Unknown>(v) ? kNoResult : kOk;
}

// ---- torus -----------------------------------------------------------------

struct TorusArgs {
  std::vector<std::string> covers;
  std::string xi, tau, mode = "noroot", strategy = "both", torsion_orders;
  std::optional<std::uint64_t> min_prime, max_modulus;
};

int run_torus(const GlobalOptions& g, const TorusArgs& a) {
  const auto start = Clock::now();
  const auto covers = read_covers(a.covers);
  const BasePoint base = make_base(a.xi, a.tau);
  ProgressionConfig cfg;
  cfg.mode = mode_arg(a.mode);
  cfg.strategy = strategy_from_string(a.strategy);
  cfg.jobs = g.jobs;
  if (g.seed) cfg.seed = *g.seed;
  if (g.max_prime) cfg.max_prime = *g.max_prime;
  if (a.min_prime) cfg.min_prime = *a.min_prime;
  if (a.max_modulus) cfg.max_modulus = *a.max_modulus;
  if (!a.torsion_orders.empty()) {
    cfg.torsion_orders.clear();
    for (unsigned p : parse_unsigned_list(a.torsion_orders)) cfg.torsion_orders.push_back(p);
  }
  // Without (PB) good progressions need not exist; the search still runs.
  for (std::size_t i = 0; i < covers.size(); ++i) {
    std::string why;
    try {
      const auto v = pb_check(covers[i]);
      if (!std::holds_alternative<CertifiedPB>(v)) why = describe(v);
    } catch (const PreconditionFailed& e) {
      why = e.what();
    }
    if (!why.empty()) std::cerr << "warning: cover " << i << " is not certified (PB): " << why << "\n";
  }
  auto r = find_progression(covers, base, cfg);
  if (auto* ex = std::get_if<Exhausted>(&r)) return exhausted(g, *ex, start);
  const auto& f = std::get<ProgressionFound>(r);
  std::cerr << "l = " << f.cert.l << ", M = " << f.cert.M << ", residues " << join(f.cert.residues) << "\n";
  return finish(g, make_envelope(f.cert, f.trace), f.trace, start);
}

// ---- rec -------------------------------------------------------------------

struct RecArgs {
  std::string trace, norm, u0, u1, coeffs, init, shift = "0";
  unsigned power = 2;
  std::optional<std::uint64_t> min_prime, max_period;
};

Int one_int(const std::string& s, const char* what) {
  const auto v = parse_integers(s);
  if (v.size() != 1) throw InputError(std::string(what) + " takes one integer");
  return v[0];
}

int run_rec(const GlobalOptions& g, const RecArgs& a) {
  const auto start = Clock::now();
  const bool quadratic = !a.trace.empty() || !a.norm.empty() || !a.u0.empty() || !a.u1.empty();
  const bool general = !a.coeffs.empty() || !a.init.empty();
  if (quadratic == general) throw InputError("give either --trace/--norm/--u0/--u1 or --coeffs/--init");
  const Int e = one_int(a.shift, "--shift");
  RecurrenceSpec spec;
  if (quadratic) {
    if (a.trace.empty() || a.norm.empty() || a.u0.empty() || a.u1.empty()) {
      throw InputError("--trace, --norm, --u0 and --u1 go together");
    }
    spec = rec_from_quadratic(one_int(a.trace, "--trace"), one_int(a.norm, "--norm"), one_int(a.u0, "--u0"),
                              one_int(a.u1, "--u1"), e, a.power);
  } else {
    spec = make_recurrence(parse_integers(a.coeffs), parse_integers(a.init), e, a.power);
  }
  RecConfig cfg;
  cfg.jobs = g.jobs;
  if (g.max_prime) cfg.max_prime = *g.max_prime;
  if (a.min_prime) cfg.min_prime = *a.min_prime;
  if (a.max_period) cfg.max_period = *a.max_period;
  auto r = find_power_free_progression(spec, cfg);
  if (auto* ex = std::get_if<Exhausted>(&r)) return exhausted(g, *ex, start);
  const auto& f = std::get<PowerFound>(r);
  if (f.degenerate) std::cerr << "warning: degenerate recurrence\n";
  std::cerr << canonical_text(spec) << ": l = " << f.cert.l << ", P = " << f.cert.P << ", residues "
            << join(f.cert.residues) << "\n";
  return finish(g, make_envelope(f.cert, f.trace), f.trace, start);
}

// ---- ell -------------------------------------------------------------------

struct EllArgs {
  std::string curve, point, mode = "noroot";
  std::vector<std::string> fibers;
  bool assume_no_cm = false;
  std::optional<std::uint64_t> min_prime;
};

int run_ell(const GlobalOptions& g, const EllArgs& a) {
  const auto start = Clock::now();
  const auto ab = parse_rationals(a.curve);
  const auto xy = parse_rationals(a.point);
  if (ab.size() != 2) throw InputError("--curve takes A,B");
  if (xy.size() != 2) throw InputError("--point takes x,y");
  const EllipticCurveQ E = make_curve(ab[0], ab[1]);
  const PointQ P = rational_point(xy[0], xy[1]);
  std::vector<FiberSpec> fibers;
  for (const auto& path : a.fibers) fibers.push_back(make_fiber(read_poly_file(path)));
  if (!a.assume_no_cm) {
    std::cerr << "note: CM curves are out of scope and are not detected; pass --assume-no-cm to acknowledge\n";
  }
  EllConfig cfg;
  cfg.mode = mode_arg(a.mode);
  cfg.jobs = g.jobs;
  if (g.seed) cfg.seed = *g.seed;
  if (g.max_prime) cfg.max_prime = *g.max_prime;
  if (a.min_prime) cfg.min_prime = *a.min_prime;
  auto r = ec_find_progression(E, P, fibers, cfg);
  if (auto* ex = std::get_if<Exhausted>(&r)) return exhausted(g, *ex, start);
  const auto& f = std::get<EllFound>(r);
  std::cerr << "l = " << f.cert.l << ", M = " << f.cert.M << ", residues " << join(f.cert.residues) << "\n";
  return finish(g, make_envelope(f.cert, f.trace), f.trace, start);
}

// ---- kron ------------------------------------------------------------------

struct KronArgs {
  std::string poly, m_range = "2..50", vectors, torsion_orders = "2,3,4,6";
  std::optional<std::uint64_t> subgroup_prime;
};

int run_kron(const GlobalOptions& g, const KronArgs& a) {
  const auto start = Clock::now();
  const CoverSpec c = make_cover(read_poly_file(a.poly));
  const auto [lo, hi] = parse_range(a.m_range);
  KronConfig cfg;
  cfg.jobs = g.jobs;
  if (g.seed) cfg.search.seed = *g.seed;
  if (g.max_prime) cfg.search.max_prime = *g.max_prime;
  KronReport rep = kron_scan(c, lo, hi, cfg);
  if (!a.vectors.empty()) {
    rep.subgroups = subgroup_scan(c.f, read_vectors(a.vectors), parse_unsigned_list(a.torsion_orders),
                                  a.subgroup_prime, cfg.search);
  }
  std::size_t unknown = 0;
  for (const auto& v : rep.verdicts) unknown += std::holds_alternative<Unknown>(v.verdict);
  std::cerr << rep.verdicts.size() - unknown << " of " << rep.verdicts.size() << " substitutions certified";
  if (rep.subgroups) {
    std::cerr << "; " << rep.subgroups->flagged.size() << " flagged at l = " << rep.subgroups->l;
  }
  std::cerr << "\n";
  SearchTrace trace;
  trace.strategy = "kronecker";
  finish(g, make_envelope(rep), trace, start);
  return unknown ? kNoResult : kOk;
}

template <class Args, class Run>
void add(CLI::App& app, const std::string& name, const std::string& help, const GlobalOptions& g, int& exit_code,
         Run run, const std::function<void(CLI::App*, Args&)>& options) {
  auto args = std::make_shared<Args>();
  auto* sub = app.add_subcommand(name, help);
  options(sub, *args);
  sub->callback([args, &g, &exit_code, run] { exit_code = guarded([&] { return run(g, *args); }); });
}

}  // namespace

void add_search_commands(CLI::App& app, const GlobalOptions& g, int& exit_code) {
  add<PbArgs>(app, "pb", "check the pull-back condition (PB) for a cover", g, exit_code, run_pb,
              [](CLI::App* s, PbArgs& a) {
                s->add_option("--cover", a.cover, "cover polynomial file")->required()->check(CLI::ExistingFile);
                s->add_flag("--isogeny", a.isogeny, "report the isogeny factor when (PB) fails");
              });
  add<TorusArgs>(app, "torus", "find a progression for covers of the torus", g, exit_code, run_torus,
                 [](CLI::App* s, TorusArgs& a) {
                   s->add_option("--cover", a.covers, "cover polynomial files")
                       ->required()
                       ->check(CLI::ExistingFile);
                   s->add_option("--xi", a.xi, "base point, e.g. 2,3")->required();
                   s->add_option("--tau", a.tau, "additive coordinate");
                   s->add_option("--mode", a.mode, "noroot or irred")->capture_default_str();
                   s->add_option("--min-prime", a.min_prime);
                   s->add_option("--max-modulus", a.max_modulus);
                   s->add_option("--strategy", a.strategy, "both, torsion or exhaustive")->capture_default_str();
                   s->add_option("--torsion-orders", a.torsion_orders, "odd primes p, e.g. 3,5,7");
                 });
  add<RecArgs>(app, "rec", "find a progression where u_n + e is not a d-th power", g, exit_code, run_rec,
               [](CLI::App* s, RecArgs& a) {
                 s->add_option("--trace", a.trace, "trace of the quadratic integer");
                 s->add_option("--norm", a.norm, "norm of the quadratic integer");
                 s->add_option("--u0", a.u0);
                 s->add_option("--u1", a.u1);
                 s->add_option("--coeffs", a.coeffs, "c1,...,ck");
                 s->add_option("--init", a.init, "u0,...,u_{k-1}");
                 s->add_option("--shift", a.shift, "e")->capture_default_str();
                 s->add_option("--power", a.power, "d")->capture_default_str();
                 s->add_option("--min-prime", a.min_prime);
                 s->add_option("--max-period", a.max_period);
               });
  add<EllArgs>(app, "ell", "find a progression of multiples nP with obstructed fibers", g, exit_code, run_ell,
               [](CLI::App* s, EllArgs& a) {
                 s->add_option("--curve", a.curve, "A,B for y^2 = x^3 + Ax + B")->required();
                 s->add_option("--point", a.point, "x,y")->required();
                 s->add_option("--fiber", a.fibers, "fiber polynomial files in X, Y, T")
                     ->required()
                     ->check(CLI::ExistingFile);
                 s->add_option("--mode", a.mode, "noroot or irred")->capture_default_str();
                 s->add_flag("--assume-no-cm", a.assume_no_cm, "acknowledge that E has no CM");
                 s->add_option("--min-prime", a.min_prime);
               });
  add<KronArgs>(app, "kron", "Kronecker substitution scan and torsion subgroup scan", g, exit_code, run_kron,
                [](CLI::App* s, KronArgs& a) {
                  s->add_option("--poly", a.poly, "polynomial file")->required()->check(CLI::ExistingFile);
                  s->add_option("--m-range", a.m_range, "lo..hi")->capture_default_str();
                  s->add_option("--vectors", a.vectors, "exponent vectors, one per line")
                      ->check(CLI::ExistingFile);
                  s->add_option("--torsion-orders", a.torsion_orders)->capture_default_str();
                  s->add_option("--subgroup-prime", a.subgroup_prime, "prime for the subgroup scan");
                });
}

}  // namespace hitforge::cli
