#include <algorithm>

#include "hitforge/elliptic.hpp"

namespace hitforge {

namespace {

Reject reject(std::string why, std::optional<std::uint64_t> n = std::nullopt) {
  return Reject{std::move(why), n ? std::optional<std::int64_t>(static_cast<std::int64_t>(*n)) : std::nullopt};
}

}  // namespace

VerifyResult ec_verify(const EllCertificate& cert, const EllipticCurveQ& E, const PointQ& P,
                       const std::vector<FiberSpec>& fibers, std::uint64_t exact_bound) {
  if (!(cert.curve == E) || !(cert.point == P)) return reject("certificate was issued for a different curve or point");
  if (cert.fiber_texts.size() != fibers.size()) return reject("fiber count mismatch");
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    if (cert.fiber_texts[i] != fibers[i].f.str()) return reject("fiber " + std::to_string(i) + " differs");
  }
  if (P.infinity || !on_curve(E, P)) return reject("base point is not on the curve");
  const std::uint64_t l = cert.l;
  if (l <= 3 || !is_prime(l)) return reject("l is not a prime > 3");
  auto red = ec_reduce(E, l);
  if (auto* bad = std::get_if<BadReduction>(&red)) return reject("BadPrime: " + bad->reason);
  const CurveFl& C = std::get<CurveFl>(red);
  std::vector<MPolyFp> fr;
  for (const auto& fb : fibers) {
    auto r = reduce_mod(fb.f, l, Var::T);
    if (auto* bad = std::get_if<BadPrime>(&r)) return reject("BadPrime: " + bad->reason);
    fr.push_back(std::get<MPolyFp>(r));
  }
  const PointFl Pt = ec_reduce_point(P, l);
  if (cert.M == 0 || !ec_mul(C, cert.M, Pt).infinity) return reject("M * P is not O mod l");
  if (cert.fibers.size() != cert.residues.size()) return reject("one fiber row per residue is required");
  for (std::size_t i = 0; i < cert.residues.size(); ++i) {
    if (cert.residues[i] >= cert.M) return reject("residue not below M", cert.residues[i]);
    if (i > 0 && cert.residues[i] <= cert.residues[i - 1]) return reject("residues not strictly ascending");
    if (cert.fibers[i].size() != fibers.size()) return reject("fiber row has the wrong length", cert.residues[i]);
  }

  const PrimeField F(l);
  for (std::size_t i = 0; i < cert.residues.size(); ++i) {
    const std::uint64_t n = cert.residues[i];
    const PointFl Q = ec_mul(C, n, Pt);
    if (Q.infinity) return reject("nP is O mod l, the fiber is undefined", n);
    for (std::size_t j = 0; j < fibers.size(); ++j) {
      const auto s = specialize(F, fr[j], {{Var::X, Q.x}, {Var::Y, Q.y}});
      if (!s.degree_preserved) return reject("fiber degree drops mod l", n);
      if (s.poly.c != cert.fibers[i][j].coeffs) return reject("recorded fiber differs mod l", n);
      const auto degrees = upoly::factor_degrees(upoly::factor(F, s.poly, cert.seed));
      if (degrees != cert.fibers[i][j].factor_degrees) return reject("recorded factor degrees differ", n);
      const bool ok = cert.mode == FiberMode::NoRationalPoint
                          ? std::find(degrees.begin(), degrees.end(), 1u) == degrees.end()
                          : degrees.size() == 1;
      if (!ok) return reject("fiber is not obstructed mod l", n);
    }
  }

  PointQ R;
  for (std::uint64_t n = 1; n <= exact_bound; ++n) {
    R = ec_add(E, R, P);
    if (!std::binary_search(cert.residues.begin(), cert.residues.end(), n % cert.M)) continue;
    if (R.infinity) return reject("nP = O over Q", n);
    for (const auto& fb : fibers) {
      const QPoly q = to_qpoly(fb.f.substitute({{Var::X, R.x}, {Var::Y, R.y}}), Var::T);
      if (q.degree() != static_cast<int>(fb.d)) return reject("exact fiber loses degree", n);
      const bool needs_root_test = cert.mode == FiberMode::NoRationalPoint || (fb.d >= 2 && fb.d <= 3);
      if (needs_root_test && qpoly::has_rational_root(q)) return reject("exact fiber has a rational root", n);
    }
  }
  return Accept{};
}

}  // namespace hitforge
