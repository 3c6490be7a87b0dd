#include <numeric>

#include "hitforge/finite_field.hpp"
#include "hitforge/parallel.hpp"
#include "hitforge/torus.hpp"

namespace hitforge {
namespace {

constexpr std::size_t kTorusSlots = 9;

// A reduced cover flattened for repeated evaluation at (x1..x9, s).
struct CompiledFiber {
  unsigned d = 0;
  struct Term {
    std::uint64_t coef;
    std::array<std::uint32_t, kTorusSlots> xe;
    std::uint32_t se;
    unsigned ydeg;
  };
  std::vector<Term> terms;
};

CompiledFiber compile(const MPolyFp& fp, unsigned d) {
  CompiledFiber cf;
  cf.d = d;
  for (const auto& [m, c] : fp.terms) {
    CompiledFiber::Term t{c, {}, m[var_index(Var::s)], m[var_index(Var::y)]};
    for (std::size_t i = 0; i < kTorusSlots; ++i) t.xe[i] = m[i];
    cf.terms.push_back(t);
  }
  return cf;
}

void evaluate(const CompiledFiber& cf, std::uint64_t l, const std::array<std::uint64_t, kTorusSlots>& x,
              std::uint64_t s, std::vector<std::uint64_t>& out) {
  out.assign(cf.d + 1, 0);
  for (const auto& t : cf.terms) {
    std::uint64_t v = t.coef;
    for (std::size_t i = 0; i < kTorusSlots; ++i) {
      if (t.xe[i]) v = mulmod(v, powmod(x[i], t.xe[i], l), l);
    }
    if (t.se) v = mulmod(v, powmod(s, t.se, l), l);
    out[t.ydeg] = (out[t.ydeg] + v) % l;
  }
}

// Fiber condition at one point; `degree_ok` reports whether deg_y survived.
bool fiber_good(const std::vector<std::uint64_t>& c, std::uint64_t l, FiberMode mode, bool& degree_ok) {
  const std::size_t d = c.size() - 1;
  degree_ok = c[d] != 0;
  if (!degree_ok) return false;
  if (d == 1) return mode == FiberMode::IrreducibleFiber;
  if (d == 2) {
    const std::uint64_t disc = (mulmod(c[1], c[1], l) + l - mulmod(4 % l, mulmod(c[2], c[0], l), l)) % l;
    return disc != 0 && powmod(disc, (l - 1) / 2, l) == l - 1;
  }
  const PrimeField F(l);
  const auto poly = upoly::make(F, c);
  return mode == FiberMode::NoRationalPoint ? !upoly::has_root(F, poly) : upoly::is_irreducible(F, poly);
}

struct Reduced {
  std::array<std::uint64_t, kTorusSlots> xi{};  // unused slots are 1
  std::vector<std::uint64_t> all_xi;
  std::optional<std::uint64_t> tau;
  std::vector<CompiledFiber> fibers;
};

unsigned needed_rank(const std::vector<CoverSpec>& covers) {
  unsigned r = 0;
  for (const auto& c : covers) r = std::max(r, c.r);
  return r;
}

bool needs_tau(const std::vector<CoverSpec>& covers) {
  for (const auto& c : covers) {
    if (c.has_additive) return true;
  }
  return false;
}

void check_shapes(const std::vector<CoverSpec>& covers, const BasePoint& base) {
  if (base.xi.size() < needed_rank(covers)) throw InputError("base point has fewer coordinates than the covers use");
  if (needs_tau(covers) && !base.tau) throw InputError("a cover involves s but the base point has no tau");
}

std::variant<Reduced, BadPrime> reduce_all(const std::vector<CoverSpec>& covers, const BasePoint& base,
                                           std::uint64_t l) {
  if (l == 2) return BadPrime{"l = 2"};
  if (!is_prime(l)) throw InputError("l must be prime");
  Reduced out;
  out.xi.fill(1);
  for (std::size_t i = 0; i < base.xi.size(); ++i) {
    const auto r = reduce_rational(base.xi[i], l);
    if (!r) return BadPrime{"l divides the denominator of xi_" + std::to_string(i + 1)};
    if (*r == 0) return BadPrime{"l divides the numerator of xi_" + std::to_string(i + 1)};
    if (i < kTorusSlots) out.xi[i] = *r;
    out.all_xi.push_back(*r);
  }
  if (base.tau) {
    const auto r = reduce_rational(*base.tau, l);
    if (!r) return BadPrime{"l divides the denominator of tau"};
    if (*r == 0) return BadPrime{"l divides the numerator of tau"};
    out.tau = *r;
  }
  for (const auto& c : covers) {
    auto red = reduce_mod(c.f, l);
    if (auto* bad = std::get_if<BadPrime>(&red)) return *bad;
    out.fibers.push_back(compile(std::get<MPolyFp>(red), c.d));
  }
  return out;
}

std::uint64_t orbit_modulus(const Reduced& red, std::uint64_t l) {
  std::uint64_t M = 1;
  for (auto x : red.all_xi) M = std::lcm(M, mult_order(x, l));
  if (red.tau) M *= l;
  return M;
}

struct PointCheck {
  bool good = true;
  bool exceptional = false;
};

PointCheck check_point(const Reduced& red, std::uint64_t l, FiberMode mode,
                       const std::array<std::uint64_t, kTorusSlots>& x, std::uint64_t s,
                       std::vector<std::uint64_t>& scratch) {
  PointCheck pc;
  for (const auto& cf : red.fibers) {
    evaluate(cf, l, x, s, scratch);
    bool degree_ok = true;
    const bool good = fiber_good(scratch, l, mode, degree_ok);
    if (!degree_ok) {
      pc.exceptional = true;
      pc.good = false;
      return pc;
    }
    if (!good) pc.good = false;
  }
  return pc;
}

}  // namespace

std::variant<GoodClasses, BadPrime> orbit_scan(const std::vector<CoverSpec>& covers, const BasePoint& base,
                                               std::uint64_t l, FiberMode mode, const OrbitScanOptions& opts) {
  check_shapes(covers, base);
  auto rr = reduce_all(covers, base, l);
  if (auto* bad = std::get_if<BadPrime>(&rr)) return *bad;
  const Reduced& red = std::get<Reduced>(rr);
  GoodClasses out;
  out.M = orbit_modulus(red, l);
  if (out.M > opts.max_modulus) {
    throw BoundExceeded("orbit modulus " + std::to_string(out.M) + " exceeds " + std::to_string(opts.max_modulus));
  }
  std::array<std::uint64_t, kTorusSlots> x;
  x.fill(1);
  std::uint64_t s = 0;
  std::vector<std::uint64_t> scratch;
  for (std::uint64_t n = 0; n < out.M; ++n) {
    if (check_point(red, l, mode, x, s, scratch).good) out.residues.push_back(n);
    for (std::size_t i = 0; i < kTorusSlots; ++i) x[i] = mulmod(x[i], red.xi[i], l);
    if (red.tau) s = (s + *red.tau) % l;
  }
  return out;
}

std::vector<TorsionWitness> torsion_targets(const std::vector<CoverSpec>& covers, std::uint64_t p, std::uint64_t l,
                                            FiberMode mode, std::size_t limit) {
  if (p < 3 || !is_prime(p)) throw PreconditionFailed("torsion order must be an odd prime");
  if (!is_prime(l) || (l - 1) % p != 0) throw PreconditionFailed("torsion_target needs l = 1 (mod p)");
  std::vector<TorsionWitness> out;
  const unsigned r = needed_rank(covers);
  if (r == 0 || r > kTorusSlots) return out;
  const bool additive = needs_tau(covers);
  // Covers only; the base point does not enter torsion targeting.
  BasePoint dummy{std::vector<Rat>(r, Rat(1)), additive ? std::optional<Rat>(Rat(1)) : std::nullopt};
  auto rr = reduce_all(covers, dummy, l);
  if (std::holds_alternative<BadPrime>(rr)) return out;
  const Reduced& red = std::get<Reduced>(rr);
  const std::uint64_t w = powmod(primitive_root(l), (l - 1) / p, l);
  std::vector<std::uint64_t> k(r, 0);
  std::vector<std::uint64_t> scratch;
  std::size_t examined = 0;
  const FiberVerdict verdict = mode == FiberMode::NoRationalPoint ? FiberVerdict::NoRoot : FiberVerdict::Irreducible;
  for (;;) {
    // Next exponent tuple, last coordinate fastest; stop after wrapping.
    std::size_t i = r;
    while (i > 0 && ++k[i - 1] == p) k[--i] = 0;
    if (i == 0) break;
    std::array<std::uint64_t, kTorusSlots> x;
    x.fill(1);
    for (unsigned j = 0; j < r; ++j) x[j] = powmod(w, k[j], l);
    const std::uint64_t sigma_count = additive ? l : 1;
    for (std::uint64_t sigma = 0; sigma < sigma_count; ++sigma) {
      if (++examined > kTorsionPointCap) return out;
      const auto pc = check_point(red, l, mode, x, sigma, scratch);
      if (!pc.good) continue;
      TorsionWitness tw{p, l, std::vector<std::uint64_t>(x.begin(), x.begin() + r),
                        additive ? std::optional<std::uint64_t>(sigma) : std::nullopt,
                        std::vector<FiberVerdict>(covers.size(), verdict)};
      out.push_back(std::move(tw));
      if (out.size() >= limit) return out;
    }
  }
  return out;
}

std::optional<TorsionWitness> torsion_target(const std::vector<CoverSpec>& covers, std::uint64_t p, std::uint64_t l,
                                             FiberMode mode) {
  auto all = torsion_targets(covers, p, l, mode, 1);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<GoodClasses> transfer(const TorsionWitness& w, const BasePoint& base) {
  const std::uint64_t l = w.l;
  if (w.zeta.size() > base.xi.size()) throw PreconditionFailed("transfer: witness has more coordinates than the base");
  std::vector<CongruenceClass> classes;
  std::uint64_t M = 1;
  for (std::size_t i = 0; i < base.xi.size(); ++i) {
    const auto x = reduce_rational(base.xi[i], l);
    if (!x || *x == 0) throw PreconditionFailed("transfer: l is not coprime to the base point");
    const std::uint64_t h = mult_order(*x, l);
    M = std::lcm(M, h);
    if (i >= w.zeta.size()) continue;
    const auto c = discrete_log(*x, w.zeta[i], l);
    if (!c) return std::nullopt;
    classes.push_back(make_class(Int(static_cast<unsigned long>(*c)), Int(static_cast<unsigned long>(h))));
  }
  if (base.tau) {
    const auto t = reduce_rational(*base.tau, l);
    if (!t || *t == 0) throw PreconditionFailed("transfer: l is not coprime to tau");
    M *= l;
    if (w.sigma) {
      const std::uint64_t n0 = mulmod(*w.sigma, invmod(*t, l), l);
      classes.push_back(make_class(Int(static_cast<unsigned long>(n0)), Int(static_cast<unsigned long>(l))));
    }
  }
  const auto joined = crt(classes);
  if (!joined) return std::nullopt;
  GoodClasses out;
  out.M = M;
  const std::uint64_t step = joined->modulus.get_ui();
  for (std::uint64_t n = joined->residue.get_ui(); n < M; n += step) out.residues.push_back(n);
  return out;
}

namespace {

struct PrimeOutcome {
  enum Kind { Bad, Skipped, Empty, Hit } kind = Empty;
  std::string note;
  GoodClasses classes;
  bool torsion_hit = false;
};

PrimeOutcome examine_prime(const std::vector<CoverSpec>& covers, const BasePoint& base, std::uint64_t l,
                           const ProgressionConfig& cfg) {
  PrimeOutcome out;
  auto rr = reduce_all(covers, base, l);
  if (auto* bad = std::get_if<BadPrime>(&rr)) {
    out.kind = PrimeOutcome::Bad;
    out.note = bad->reason;
    return out;
  }
  const std::uint64_t M = orbit_modulus(std::get<Reduced>(rr), l);
  if (M > cfg.max_modulus) {
    out.kind = PrimeOutcome::Skipped;
    out.note = "modulus " + std::to_string(M) + " over the cap";
    return out;
  }
  std::vector<std::uint64_t> torsion_residues;
  if (cfg.strategy != Strategy::Exhaustive) {
    for (std::uint64_t p : cfg.torsion_orders) {
      if (p < 3 || p == l || !is_prime(p) || (l - 1) % p != 0) continue;
      for (const auto& w : torsion_targets(covers, p, l, cfg.mode)) {
        if (auto g = transfer(w, base)) {
          torsion_residues.insert(torsion_residues.end(), g->residues.begin(), g->residues.end());
        }
      }
    }
    std::sort(torsion_residues.begin(), torsion_residues.end());
    torsion_residues.erase(std::unique(torsion_residues.begin(), torsion_residues.end()), torsion_residues.end());
    out.torsion_hit = !torsion_residues.empty();
  }
  if (cfg.strategy == Strategy::Torsion) {
    out.classes = GoodClasses{M, std::move(torsion_residues)};
  } else {
    auto scan = orbit_scan(covers, base, l, cfg.mode, OrbitScanOptions{cfg.max_modulus});
    out.classes = std::get<GoodClasses>(scan);
  }
  out.kind = out.classes.residues.empty() ? PrimeOutcome::Empty : PrimeOutcome::Hit;
  return out;
}

std::string log_line(std::uint64_t l, const PrimeOutcome& o) {
  std::string s = "l=" + std::to_string(l) + " ";
  switch (o.kind) {
    case PrimeOutcome::Bad: return s + "bad: " + o.note;
    case PrimeOutcome::Skipped: return s + "skipped: " + o.note;
    case PrimeOutcome::Empty: return s + "M=" + std::to_string(o.classes.M) + " good=0";
    case PrimeOutcome::Hit:
      return s + "M=" + std::to_string(o.classes.M) + " good=" + std::to_string(o.classes.residues.size()) +
             (o.torsion_hit ? " torsion-hit" : "");
  }
  return s;
}

}  // namespace

std::variant<ProgressionFound, Exhausted> find_progression(const std::vector<CoverSpec>& covers,
                                                           const BasePoint& base, const ProgressionConfig& cfg) {
  if (covers.empty()) throw PreconditionFailed("find_progression needs at least one cover");
  if (std::holds_alternative<Dependent>(mult_independent(base.xi))) {
    throw PreconditionFailed("torus coordinates of the base point are multiplicatively dependent");
  }
  check_shapes(covers, base);
  const auto primes = primes_between(std::max<std::uint64_t>(cfg.min_prime, 3), cfg.max_prime);
  SearchTrace trace;
  trace.strategy = to_string(cfg.strategy);
  auto record = [&](std::uint64_t l, const PrimeOutcome& o) {
    ++trace.primes_tried;
    if (o.kind == PrimeOutcome::Bad) trace.bad_primes.push_back(l);
    if (o.kind == PrimeOutcome::Skipped) trace.skipped_primes.push_back(l);
    if (o.torsion_hit) trace.torsion_hits.push_back(l);
    trace.log.push_back(log_line(l, o));
  };
  const auto hit = first_in_order<std::uint64_t, PrimeOutcome>(
      primes, cfg.jobs, [&](const std::uint64_t& l) { return examine_prime(covers, base, l, cfg); },
      [](const PrimeOutcome& o) { return o.kind == PrimeOutcome::Hit; },
      [&](std::size_t i, const PrimeOutcome& o) { record(primes[i], o); });
  if (!hit) return Exhausted{std::move(trace)};
  const std::uint64_t l = primes[hit->index];
  record(l, hit->result);

  ProgressionCertificate cert;
  cert.mode = cfg.mode;
  cert.l = l;
  cert.M = hit->result.classes.M;
  cert.seed = cfg.seed;
  cert.base_digest = digest_of(base);
  for (const auto& c : covers) cert.cover_digests.push_back(digest_of(c));
  const auto& residues = hit->result.classes.residues;
  cert.residues.assign(residues.begin(), residues.begin() + std::min(residues.size(), cfg.max_residues));
  const Reduced red = std::get<Reduced>(reduce_all(covers, base, l));
  const PrimeField F(l);
  std::vector<std::uint64_t> scratch;
  for (std::uint64_t n : cert.residues) {
    std::array<std::uint64_t, kTorusSlots> x;
    for (std::size_t i = 0; i < kTorusSlots; ++i) x[i] = powmod(red.xi[i], n, l);
    const std::uint64_t s = red.tau ? mulmod(n % l, *red.tau, l) : 0;
    std::vector<FiberRecord> row;
    for (const auto& cf : red.fibers) {
      evaluate(cf, l, x, s, scratch);
      const auto fz = upoly::factor(F, upoly::make(F, scratch), cfg.seed);
      row.push_back(FiberRecord{scratch, upoly::factor_degrees(fz)});
    }
    cert.fibers.push_back(std::move(row));
  }
  return ProgressionFound{std::move(cert), std::move(trace)};
}

}  // namespace hitforge
