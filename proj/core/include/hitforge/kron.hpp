#pragma once

// Kronecker substitutions x_i -> t^{a_i} of covers f(x, y) and the search for
// exponent vectors where the substituted polynomial splits.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hitforge/pb_gate.hpp"

namespace hitforge {

struct KronSubstitution {
  MPolyQ g;              // in t and y, multiplied through by t^shift
  std::int64_t shift = 0;
  bool collapsed = false;  // two monomials of f met, or t disappeared
};

/// x_i -> t^{a_i} for i = 1..|a|.  Throws PreconditionFailed when f involves
/// a variable other than x1..x_|a| and y, or an exponent is zero.
KronSubstitution kron_substitute(const MPolyQ& f, const std::vector<std::int64_t>& exponents);

/// kron_substitute with x_i -> theta_i t^{a_i} over F_l, applied to the
/// reduction of f.  BadPrime as for reduce_mod.
std::variant<MPolyFp, BadPrime> kron_substitute_mod(const MPolyQ& f, const std::vector<std::int64_t>& exponents,
                                                    const std::vector<std::uint64_t>& theta, std::uint64_t l);

/// For g quadratic in y over F_l[t]: the y-discriminant is c * h^2 over the
/// algebraic closure (zero included), so g splits there.
bool discriminant_square_mod(const MPolyFp& g);

/// (1, m, m^2, ..., m^{r-1}); BoundExceeded past 2^62.
std::vector<std::int64_t> kronecker_exponents(unsigned m, unsigned r);

/// The pb-gate specialization certificate on a polynomial in t and y.
std::variant<AbsIrredWitness, Unknown> bivariate_abs_irreducible(const MPolyQ& g, const AbsIrredOptions& opts = {});

struct KronVerdict {
  unsigned m = 0;
  MPolyQ substituted;
  bool collapsed = false;
  std::variant<AbsIrredWitness, Unknown> verdict;
};

struct ExceptionalVector {
  std::vector<std::int64_t> a;
  std::string reason;  // "degenerate", "degree-drop", "factorization", "unknown"
  unsigned order = 0;  // torsion order of theta, 0 when theta plays no part
  std::vector<std::uint64_t> theta;  // in F_l
};

struct SubgroupScan {
  std::uint64_t l = 0;
  std::vector<unsigned> orders;          // realized in F_l
  std::vector<unsigned> skipped_orders;  // order does not divide l - 1
  std::vector<ExceptionalVector> flagged;
};

struct KronReport {
  MPolyQ f;
  std::string f_digest;
  unsigned m_lo = 0, m_hi = 0;
  std::vector<KronVerdict> verdicts;
  std::optional<SubgroupScan> subgroups;
};

struct KronConfig {
  AbsIrredOptions search;
  unsigned jobs = 1;
};

/// Requires pb_check(c) = CertifiedPB (PreconditionFailed otherwise).
KronReport kron_scan(const CoverSpec& c, unsigned m_lo, unsigned m_hi, const KronConfig& cfg = {});

/// Least prime l >= 1000 with l = 1 mod lcm(orders).
std::uint64_t default_subgroup_prime(const std::vector<unsigned>& orders);

/// For each vector and each theta in mu_h^r (h in orders, h | l - 1) tests
/// f(theta_i t^{a_i}, y) over F_l: the discriminant criterion for d = 2, a
/// specialization search over F_{l^L} otherwise.  Vectors with a zero entry
/// are flagged "degenerate" without testing.
SubgroupScan subgroup_scan(const MPolyQ& f, const std::vector<std::vector<std::int64_t>>& vectors,
                           const std::vector<unsigned>& orders, std::optional<std::uint64_t> l = std::nullopt,
                           const AbsIrredOptions& opts = {});

/// Re-derives every substitution, re-checks every witness and every flagged
/// factorization.  nullopt when the report holds up.
std::optional<std::string> check_kron_report(const KronReport& report);

}  // namespace hitforge
