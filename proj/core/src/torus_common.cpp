#include "hitforge/torus.hpp"

#include "hitforge/digest.hpp"

namespace hitforge {

std::string to_string(FiberMode m) { return m == FiberMode::NoRationalPoint ? "noroot" : "irred"; }

FiberMode fiber_mode_from_string(const std::string& s) {
  if (s == "noroot") return FiberMode::NoRationalPoint;
  if (s == "irred") return FiberMode::IrreducibleFiber;
  throw InputError("unknown mode '" + s + "' (expected noroot or irred)");
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Both: return "both";
    case Strategy::Torsion: return "torsion";
    case Strategy::Exhaustive: return "exhaustive";
  }
  return "both";
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "both") return Strategy::Both;
  if (s == "torsion") return Strategy::Torsion;
  if (s == "exhaustive") return Strategy::Exhaustive;
  throw InputError("unknown strategy '" + s + "'");
}

BasePoint make_base_point(std::vector<Rat> xi, std::optional<Rat> tau) {
  if (xi.empty()) throw InputError("base point needs at least one torus coordinate");
  for (auto& x : xi) {
    x.canonicalize();
    if (x == 0) throw InputError("torus coordinates must be nonzero");
  }
  if (tau) {
    tau->canonicalize();
    if (*tau == 0) throw InputError("tau must be nonzero");
  }
  return BasePoint{std::move(xi), std::move(tau)};
}

std::string canonical_text(const BasePoint& b) {
  std::string out = "xi=";
  for (std::size_t i = 0; i < b.xi.size(); ++i) {
    if (i) out += ',';
    out += to_string(b.xi[i]);
  }
  if (b.tau) out += ";tau=" + to_string(*b.tau);
  return out;
}

std::string digest_of(const BasePoint& b) { return sha256_hex(canonical_text(b)); }

std::string digest_of(const CoverSpec& c) { return poly_digest(c.f); }

QPoly exact_fiber(const CoverSpec& c, const BasePoint& base, std::uint64_t n) {
  std::map<Var, Rat> values;
  for (unsigned i = 0; i < c.r; ++i) {
    if (i >= base.xi.size()) throw InputError("base point has fewer coordinates than the cover");
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.xi[i].get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.xi[i].get_den_mpz_t(), n);
    Rat v(num, den);
    v.canonicalize();
    values[torus_var(i)] = v;
  }
  if (c.has_additive) {
    if (!base.tau) throw InputError("cover involves s but the base point has no tau");
    values[Var::s] = *base.tau * Rat(static_cast<unsigned long>(n));
  }
  return to_qpoly(c.f.substitute(values), Var::y);
}

}  // namespace hitforge
