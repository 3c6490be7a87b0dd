#include <numeric>
#include <random>

#include "hitforge/digest.hpp"
#include "hitforge/kron.hpp"
#include "hitforge/parallel.hpp"

namespace hitforge {

std::variant<AbsIrredWitness, Unknown> bivariate_abs_irreducible(const MPolyQ& g, const AbsIrredOptions& opts) {
  for (Var v : g.variables()) {
    if (v != Var::t && v != Var::y) throw PreconditionFailed("bivariate_abs_irreducible: only t and y may appear");
  }
  return abs_irreducible(g, opts);
}

KronReport kron_scan(const CoverSpec& c, unsigned m_lo, unsigned m_hi, const KronConfig& cfg) {
  if (c.has_additive) throw PreconditionFailed("kron_scan: the cover involves the additive coordinate s");
  const PBVerdict pb = pb_check(c, PBOptions{cfg.search});
  if (!std::holds_alternative<CertifiedPB>(pb)) {
    throw PreconditionFailed("kron_scan: f(x^d, y) is not certified irreducible");
  }
  KronReport report;
  report.f = c.f;
  report.f_digest = poly_digest(c.f);
  report.m_lo = m_lo;
  report.m_hi = m_hi;
  std::vector<unsigned> ms;
  for (unsigned m = std::max(m_lo, 2u); m <= m_hi; ++m) ms.push_back(m);
  report.verdicts = parallel_map<unsigned, KronVerdict>(ms, cfg.jobs, [&](const unsigned& m) {
    const auto sub = kron_substitute(c.f, kronecker_exponents(m, c.r));
    return KronVerdict{m, sub.g, sub.collapsed, certify_abs_irreducible(sub.g, cfg.search)};
  });
  return report;
}

namespace {

// All tuples of r exponents in [0, h), last coordinate fastest.
bool next_tuple(std::vector<unsigned>& k, unsigned h) {
  for (std::size_t i = k.size(); i-- > 0;) {
    if (++k[i] < h) return true;
    k[i] = 0;
  }
  return false;
}

// A specialization t = t0 in F_{l^L} keeping degree with an irreducible fiber.
bool has_irreducible_specialization(const MPolyFp& g, unsigned d, const AbsIrredOptions& opts) {
  const unsigned L = lcm_upto(d);
  Int size = 1;
  for (unsigned i = 0; i < L; ++i) size *= static_cast<unsigned long>(g.l);
  if (size > Int(static_cast<unsigned long>(opts.field_budget))) return false;
  const ExtField F(ext_field(g.l, L, opts.field_budget));
  std::mt19937_64 rng(opts.seed ^ (g.l * 0x9e3779b97f4a7c15ULL));
  for (unsigned j = 0; j < opts.points_per_prime; ++j) {
    const auto sp = specialize(F, g, {{Var::t, F.random(rng)}});
    if (sp.degree_preserved && upoly::is_irreducible(F, sp.poly)) return true;
  }
  return false;
}

}  // namespace

SubgroupScan subgroup_scan(const MPolyQ& f, const std::vector<std::vector<std::int64_t>>& vectors,
                           const std::vector<unsigned>& orders, std::optional<std::uint64_t> l,
                           const AbsIrredOptions& opts) {
  SubgroupScan out;
  out.l = l ? *l : default_subgroup_prime(orders);
  if (out.l < 3 || !is_prime(out.l)) throw PreconditionFailed("subgroup_scan needs an odd prime l");
  for (unsigned h : orders) {
    if (h == 0) throw PreconditionFailed("torsion orders must be positive");
    ((out.l - 1) % h == 0 ? out.orders : out.skipped_orders).push_back(h);
  }
  const unsigned d = f.degree(Var::y);
  const std::uint64_t g = primitive_root(out.l);
  for (const auto& a : vectors) {
    if (std::find(a.begin(), a.end(), 0) != a.end()) {
      out.flagged.push_back(ExceptionalVector{a, "degenerate", 0, {}});
      continue;
    }
    std::optional<ExceptionalVector> hit;
    for (unsigned h : out.orders) {
      const std::uint64_t w = powmod(g, (out.l - 1) / h, out.l);
      std::vector<unsigned> k(a.size(), 0);
      do {
        std::vector<std::uint64_t> theta;
        for (unsigned ki : k) theta.push_back(powmod(w, ki, out.l));
        auto sub = kron_substitute_mod(f, a, theta, out.l);
        if (std::holds_alternative<BadPrime>(sub)) {
          hit = ExceptionalVector{a, "unknown", h, theta};
          break;
        }
        const auto& gm = std::get<MPolyFp>(sub);
        if (gm.degree(Var::y) != d) {
          hit = ExceptionalVector{a, "degree-drop", h, theta};
        } else if (d == 2 && discriminant_square_mod(gm)) {
          hit = ExceptionalVector{a, "factorization", h, theta};
        } else if (d >= 3 && !has_irreducible_specialization(gm, d, opts)) {
          hit = ExceptionalVector{a, "unknown", h, theta};
        }
      } while (!hit && next_tuple(k, h));
      if (hit) break;
    }
    if (hit) out.flagged.push_back(std::move(*hit));
  }
  return out;
}

}  // namespace hitforge
