#include <algorithm>
#include <numeric>

#include "hitforge/finite_field.hpp"
#include "hitforge/torus.hpp"

namespace hitforge {
namespace {

Reject reject(std::string reason, std::optional<std::uint64_t> n = std::nullopt) {
  Reject r{std::move(reason), std::nullopt};
  if (n) r.witness = static_cast<std::int64_t>(*n);
  return r;
}

}  // namespace

VerifyResult verify_certificate(const ProgressionCertificate& cert, const std::vector<CoverSpec>& covers,
                                const BasePoint& base, std::uint64_t exact_bound) {
  const std::uint64_t l = cert.l;
  if (covers.empty() || covers.size() != cert.cover_digests.size()) return reject("cover count does not match");
  if (l < 3 || !is_prime(l)) return reject("l is not an odd prime");
  for (const auto& c : covers) {
    if (c.r > base.xi.size()) return reject("base point has fewer coordinates than a cover");
    if (c.has_additive && !base.tau) return reject("a cover involves s but there is no tau");
  }

  std::map<Var, std::uint64_t> xi_mod;
  std::uint64_t M = 1;
  for (std::size_t i = 0; i < base.xi.size(); ++i) {
    const auto r = reduce_rational(base.xi[i], l);
    if (!r || *r == 0) return reject("BadPrime: l divides a numerator or denominator of xi");
    M = std::lcm(M, mult_order(*r, l));
    if (i < 9) xi_mod[torus_var(i)] = *r;
  }
  std::optional<std::uint64_t> tau_mod;
  if (base.tau) {
    tau_mod = reduce_rational(*base.tau, l);
    if (!tau_mod || *tau_mod == 0) return reject("BadPrime: l divides a numerator or denominator of tau");
    M *= l;
  }
  std::vector<MPolyFp> reduced;
  for (const auto& c : covers) {
    auto red = reduce_mod(c.f, l);
    if (auto* bad = std::get_if<BadPrime>(&red)) return reject("BadPrime: " + bad->reason);
    reduced.push_back(std::get<MPolyFp>(red));
  }
  if (M != cert.M) return reject("modulus is " + std::to_string(M) + ", certificate says " + std::to_string(cert.M));
  if (cert.residues.empty()) return reject("no residues");
  for (std::size_t i = 0; i < cert.residues.size(); ++i) {
    if (cert.residues[i] >= M) return reject("residue out of range", cert.residues[i]);
    if (i && cert.residues[i] <= cert.residues[i - 1]) return reject("residues not strictly ascending", cert.residues[i]);
  }
  if (cert.fibers.size() != cert.residues.size()) return reject("fiber records do not match the residues");

  const PrimeField F(l);
  for (std::size_t idx = 0; idx < cert.residues.size(); ++idx) {
    const std::uint64_t n = cert.residues[idx];
    if (cert.fibers[idx].size() != covers.size()) return reject("fiber record row has the wrong width", n);
    std::map<Var, std::uint64_t> point;
    for (const auto& [v, x] : xi_mod) point[v] = powmod(x, n, l);
    if (tau_mod) point[Var::s] = mulmod(n % l, *tau_mod, l);
    for (std::size_t c = 0; c < covers.size(); ++c) {
      const auto sp = specialize(F, reduced[c], point);
      if (!sp.degree_preserved) return reject("fiber drops degree mod l", n);
      const FiberRecord& rec = cert.fibers[idx][c];
      if (sp.poly.c != rec.coeffs) return reject("recorded fiber does not match", n);
      const auto degrees = upoly::factor_degrees(upoly::factor(F, sp.poly, cert.seed));
      if (degrees != rec.factor_degrees) return reject("recorded factor degrees do not match", n);
      const bool has_linear = std::find(degrees.begin(), degrees.end(), 1u) != degrees.end();
      if (cert.mode == FiberMode::NoRationalPoint && has_linear) return reject("fiber has a root mod l", n);
      if (cert.mode == FiberMode::IrreducibleFiber && degrees.size() != 1) return reject("fiber is reducible mod l", n);
    }
  }

  for (std::uint64_t n = 0; n <= exact_bound; ++n) {
    if (!std::binary_search(cert.residues.begin(), cert.residues.end(), n % M)) continue;
    for (const auto& c : covers) {
      const QPoly q = exact_fiber(c, base, n);
      if (q.degree() != static_cast<int>(c.d)) return reject("exact fiber drops degree", n);
      // Degree <= 3: irreducible over Q iff no rational root.  Beyond that the
      // exact check only certifies the absence of rational roots.
      if (c.d >= 2 || cert.mode == FiberMode::NoRationalPoint) {
        if (qpoly::has_rational_root(q)) return reject("exact fiber has a rational root", n);
      }
    }
  }
  return Accept{};
}

}  // namespace hitforge
