#include <algorithm>

#include "hitforge/elliptic.hpp"
#include "hitforge/parallel.hpp"

namespace hitforge {

std::optional<std::string> ec_fiber_gate(const FiberSpec& fiber) {
  if (fiber.d == 1) return std::nullopt;
  if (fiber.d == 2) {
    if (square_up_to_constant(discriminant_quadratic(fiber.f, Var::T)).is_square) {
      return "the T-discriminant is a square up to a constant";
    }
    return std::nullopt;
  }
  // Rename into the pb-gate variables: X -> x1, Y -> x2, T -> y.
  const MPolyQ g = fiber.f.substitute(Var::T, MPolyQ::variable(Var::y))
                       .substitute(Var::X, MPolyQ::variable(Var::x1))
                       .substitute(Var::Y, MPolyQ::variable(Var::x2));
  auto r = certify_abs_irreducible(g);
  if (auto* u = std::get_if<Unknown>(&r)) return "no absolute irreducibility witness: " + u->reason;
  return std::nullopt;
}

namespace {

struct ReducedEll {
  CurveFl curve;
  PointFl point;
  std::vector<MPolyFp> fibers;
};

std::variant<ReducedEll, BadPrime> reduce_all(const EllipticCurveQ& E, const PointQ& P,
                                              const std::vector<FiberSpec>& fibers, std::uint64_t l) {
  if (l <= 3 || !is_prime(l)) return BadPrime{"l must be a prime > 3"};
  auto c = ec_reduce(E, l);
  if (auto* bad = std::get_if<BadReduction>(&c)) return BadPrime{bad->reason};
  ReducedEll r{std::get<CurveFl>(c), ec_reduce_point(P, l), {}};
  for (const auto& fb : fibers) {
    auto fr = reduce_mod(fb.f, l, Var::T);
    if (auto* bad = std::get_if<BadPrime>(&fr)) return *bad;
    r.fibers.push_back(std::move(std::get<MPolyFp>(fr)));
  }
  return r;
}

bool fiber_good(const PrimeField& F, const Specialization<PrimeField>& s, unsigned d, FiberMode mode) {
  if (!s.degree_preserved) return false;
  if (d == 1) return mode == FiberMode::IrreducibleFiber;
  return mode == FiberMode::NoRationalPoint ? !upoly::has_root(F, s.poly) : upoly::is_irreducible(F, s.poly);
}

Specialization<PrimeField> fiber_at(const PrimeField& F, const MPolyFp& f, const PointFl& Q) {
  return specialize(F, f, {{Var::X, Q.x}, {Var::Y, Q.y}});
}

}  // namespace

std::variant<GoodClasses, BadPrime> ec_orbit_scan(const EllipticCurveQ& E, const PointQ& P,
                                                  const std::vector<FiberSpec>& fibers, std::uint64_t l,
                                                  FiberMode mode) {
  auto red = reduce_all(E, P, fibers, l);
  if (auto* bad = std::get_if<BadPrime>(&red)) return *bad;
  const auto& r = std::get<ReducedEll>(red);
  GoodClasses out;
  out.M = ec_point_order(r.curve, r.point, ec_count_points(r.curve));
  const PrimeField F(l);
  PointFl Q = r.point;
  for (std::uint64_t n = 1; n < out.M; ++n, Q = ec_add(r.curve, Q, r.point)) {
    bool good = true;
    for (std::size_t i = 0; good && i < fibers.size(); ++i) {
      good = fiber_good(F, fiber_at(F, r.fibers[i], Q), fibers[i].d, mode);
    }
    if (good) out.residues.push_back(n);
  }
  return out;
}

namespace {

struct EllOutcome {
  enum Kind { Bad, Skipped, Empty, Hit } kind = Empty;
  GoodClasses classes;
  std::string note;
};

std::string log_line(std::uint64_t l, const EllOutcome& o) {
  std::string s = "l=" + std::to_string(l) + " ";
  switch (o.kind) {
    case EllOutcome::Bad: return s + "bad: " + o.note;
    case EllOutcome::Skipped: return s + "skipped: " + o.note;
    case EllOutcome::Empty:
    case EllOutcome::Hit:
      return s + "M=" + std::to_string(o.classes.M) + " good=" + std::to_string(o.classes.residues.size());
  }
  return s;
}

}  // namespace

std::variant<EllFound, Exhausted> ec_find_progression(const EllipticCurveQ& E, const PointQ& P,
                                                      const std::vector<FiberSpec>& fibers, const EllConfig& cfg) {
  if (fibers.empty()) throw PreconditionFailed("ec_find_progression needs at least one fiber");
  if (P.infinity || !on_curve(E, P)) throw PreconditionFailed("base point is not an affine point of the curve");
  if (!is_non_torsion(E, P)) throw PreconditionFailed("base point is torsion");
  for (const auto& fb : fibers) {
    if (auto why = ec_fiber_gate(fb)) throw PreconditionFailed("fiber " + fb.f.str() + " fails the gate: " + *why);
  }
  const auto primes = primes_between(std::max<std::uint64_t>(cfg.min_prime, 5), cfg.max_prime);
  SearchTrace trace;
  trace.strategy = "exhaustive";
  auto record = [&](std::uint64_t l, const EllOutcome& o) {
    ++trace.primes_tried;
    if (o.kind == EllOutcome::Bad) trace.bad_primes.push_back(l);
    if (o.kind == EllOutcome::Skipped) trace.skipped_primes.push_back(l);
    trace.log.push_back(log_line(l, o));
  };
  auto examine = [&](const std::uint64_t& l) {
    EllOutcome o;
    try {
      auto r = ec_orbit_scan(E, P, fibers, l, cfg.mode);
      if (auto* bad = std::get_if<BadPrime>(&r)) {
        o.kind = EllOutcome::Bad;
        o.note = bad->reason;
      } else {
        o.classes = std::move(std::get<GoodClasses>(r));
        o.kind = o.classes.residues.empty() ? EllOutcome::Empty : EllOutcome::Hit;
      }
    } catch (const BoundExceeded& e) {
      o.kind = EllOutcome::Skipped;
      o.note = e.what();
    }
    return o;
  };
  const auto hit = first_in_order<std::uint64_t, EllOutcome>(
      primes, cfg.jobs, examine, [](const EllOutcome& o) { return o.kind == EllOutcome::Hit; },
      [&](std::size_t i, const EllOutcome& o) { record(primes[i], o); });
  if (!hit) return Exhausted{std::move(trace)};
  const std::uint64_t l = primes[hit->index];
  record(l, hit->result);

  EllCertificate cert;
  cert.mode = cfg.mode;
  cert.l = l;
  cert.M = hit->result.classes.M;
  cert.curve = E;
  cert.point = P;
  cert.seed = cfg.seed;
  for (const auto& fb : fibers) cert.fiber_texts.push_back(fb.f.str());
  const auto& all = hit->result.classes.residues;
  cert.residues.assign(all.begin(), all.begin() + std::min(all.size(), cfg.max_residues));
  const auto reduced = reduce_all(E, P, fibers, l);
  const auto& red = std::get<ReducedEll>(reduced);
  const PrimeField F(l);
  for (std::uint64_t n : cert.residues) {
    const PointFl Q = ec_mul(red.curve, n, red.point);
    std::vector<FiberRecord> row;
    for (const auto& fr : red.fibers) {
      const auto s = fiber_at(F, fr, Q);
      row.push_back(FiberRecord{s.poly.c, upoly::factor_degrees(upoly::factor(F, s.poly, cfg.seed))});
    }
    cert.fibers.push_back(std::move(row));
  }
  return EllFound{std::move(cert), std::move(trace)};
}

}  // namespace hitforge
