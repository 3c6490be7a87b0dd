#pragma once

// Absolute irreducibility certificates and the pull-back gate: f is checked
// once at m = deg_y f, where the pull-back x_i -> x_i^m either stays
// absolutely irreducible or splits.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hitforge/finite_field.hpp"
#include "hitforge/mpoly.hpp"

namespace hitforge {

/// A cover Y -> G_m^r x G_a given by f(x1..xr, s, y).
struct CoverSpec {
  MPolyQ f;            // primitive-integral
  unsigned r = 0;      // highest torus index used
  bool has_additive = false;
  unsigned d = 0;      // deg_y f
};

/// Validates and normalizes: deg_y >= 1, only x1..x9, s, y appear, and f has
/// no repeated factor.  Throws InputError.
CoverSpec make_cover(const MPolyQ& f);

struct Unknown {
  std::string reason;
};

/// deg_y f = 1 and the y-content is trivial.
struct LinearWitness {};

/// d = 2, trivial y-content, and the y-discriminant is not a square up to a
/// constant in Qbar[x].
struct DiscriminantWitness {
  MPolyQ discriminant;
};

/// f mod l specialized at `point` (elements of F_{l^L}, L = lcm(1..d)) keeps
/// degree d and is irreducible over F_{l^L}; the y-content of f is trivial.
struct SpecializationWitness {
  std::uint64_t l = 0;
  unsigned L = 1;
  std::vector<std::uint64_t> modulus;  // F_{l^L} = F_l[z]/(modulus)
  std::vector<std::pair<Var, std::vector<std::uint64_t>>> point;
  std::vector<std::vector<std::uint64_t>> fiber;  // low-to-high
};

using AbsIrredWitness = std::variant<LinearWitness, DiscriminantWitness, SpecializationWitness>;

struct AbsIrredOptions {
  std::uint64_t min_prime = 3;
  std::uint64_t max_prime = 200;
  unsigned points_per_prime = 16;
  std::uint64_t seed = 0;
  std::uint64_t field_budget = kDefaultFieldBudget;
};

unsigned lcm_upto(unsigned d);

/// Searches for a linear or specialization witness.  Never returns a witness
/// for an absolutely reducible f.
std::variant<AbsIrredWitness, Unknown> abs_irreducible(const MPolyQ& f, const AbsIrredOptions& opts = {});

/// abs_irreducible, except that d = 2 is decided exactly by the discriminant.
std::variant<AbsIrredWitness, Unknown> certify_abs_irreducible(const MPolyQ& f, const AbsIrredOptions& opts = {});

/// Recomputes a witness for f from scratch; nullopt on success, else why not.
std::optional<std::string> check_abs_irred_witness(const MPolyQ& f, const AbsIrredWitness& w);

// ---- the (PB) gate ---------------------------------------------------------

/// `factor` divides pullback(f, m) over Q with 0 < deg_y factor < d.
struct ExplicitFactor {
  unsigned m = 0;
  MPolyQ factor;
};

/// d = 2: the discriminant of pullback(f, 2) equals constant * root^2.  Used
/// when the constant is not a rational square, so the factor is not over Q.
struct SquareDiscriminant {
  MPolyQ discriminant;
  Rat constant;
  MPolyQ root;
};

using NotPBEvidence = std::variant<ExplicitFactor, SquareDiscriminant>;

struct CertifiedPB {
  AbsIrredWitness witness;  // for pullback(f, d)
};
struct CertifiedNotPB {
  NotPBEvidence evidence;
};
using PBVerdict = std::variant<CertifiedPB, CertifiedNotPB, Unknown>;

struct PBOptions {
  AbsIrredOptions search;
  std::size_t max_candidates = 10'000;  // linear-factor candidates
};

/// Throws PreconditionFailed unless f itself is certified absolutely
/// irreducible.
PBVerdict pb_check(const CoverSpec& c, const PBOptions& opts = {});

/// Recomputes the verdict's evidence; nullopt when it holds.  Unknown never
/// checks.
std::optional<std::string> check_pb_verdict(const CoverSpec& c, const PBVerdict& v);

/// A factor of pullback(f, d) over Q whose y-degree is 1, found by the
/// rational-root method over Q(x); nullopt when none exists among the
/// candidates.
std::optional<MPolyQ> find_linear_factor(const MPolyQ& g, std::size_t max_candidates = 10'000);

struct IsogenyFactor {
  unsigned m = 0;
  MPolyQ factor;              // proper factor of pullback(f, m)
  unsigned residual_degree = 0;  // deg_y factor; 1 means pi is birationally the isogeny itself
};

/// For the least m | d (m > 1) where pullback(f, m) acquires a proper factor
/// over Q, that factor.  Throws PreconditionFailed ("NotApplicable") when pb_check
/// certifies (PB) or finds no explicit factor.
IsogenyFactor isogeny_factor_report(const CoverSpec& c, const PBOptions& opts = {});

/// Norm of P under x_i -> zeta x_i for every k-th root of unity zeta and every
/// torus variable, rewritten in x_i^k -> x_i.
MPolyQ torus_norm(const MPolyQ& P, unsigned k);

}  // namespace hitforge
