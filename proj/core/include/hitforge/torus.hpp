#pragma once

// Progression search on the cyclic group generated by w = (xi, tau) in
// G_m^r x G_a: exhaustive orbit scans mod l, torsion targeting, transfer by
// discrete logarithms, and the certificate verifier.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hitforge/mpoly.hpp"
#include "hitforge/pb_gate.hpp"
#include "hitforge/search_trace.hpp"
#include "hitforge/verdict.hpp"

namespace hitforge {

enum class FiberMode { NoRationalPoint, IrreducibleFiber };

std::string to_string(FiberMode m);
FiberMode fiber_mode_from_string(const std::string& s);  // "noroot" | "irred"

struct BasePoint {
  std::vector<Rat> xi;
  std::optional<Rat> tau;
};

/// Throws InputError for zero coordinates.
BasePoint make_base_point(std::vector<Rat> xi, std::optional<Rat> tau = std::nullopt);

/// "xi=2,3;tau=1" style canonical text (digested into certificates).
std::string canonical_text(const BasePoint& b);

/// SHA-256 of the canonical printing.
std::string digest_of(const BasePoint& b);
std::string digest_of(const CoverSpec& c);

/// Residues n in [0, M) on which every cover's fiber is good.
struct GoodClasses {
  std::uint64_t M = 1;
  std::vector<std::uint64_t> residues;  // ascending
};

struct OrbitScanOptions {
  std::uint64_t max_modulus = 10'000'000;  // BoundExceeded beyond this
};

/// Exhausts n in [0, M); BadPrime for l = 2, l dividing a numerator or
/// denominator of xi / tau, or bad reduction of a cover.
std::variant<GoodClasses, BadPrime> orbit_scan(const std::vector<CoverSpec>& covers, const BasePoint& base,
                                               std::uint64_t l, FiberMode mode, const OrbitScanOptions& opts = {});

enum class FiberVerdict { NoRoot, Irreducible, Exceptional };

struct TorsionWitness {
  std::uint64_t p = 0;
  std::uint64_t l = 0;
  std::vector<std::uint64_t> zeta;      // each zeta_i^p = 1 in F_l, not all 1
  std::optional<std::uint64_t> sigma;   // additive target when a cover involves s
  std::vector<FiberVerdict> verdicts;   // per cover
};

inline constexpr std::size_t kTorsionPointCap = 10'000;

/// First torsion point (lexicographic in the exponents of w = g^((l-1)/p),
/// g the least primitive root) whose fibers meet the mode for every cover.
/// Requires p odd prime and l = 1 (mod p).
std::optional<TorsionWitness> torsion_target(const std::vector<CoverSpec>& covers, std::uint64_t p, std::uint64_t l,
                                             FiberMode mode);

/// Every torsion witness at (p, l), in enumeration order, up to the cap.
std::vector<TorsionWitness> torsion_targets(const std::vector<CoverSpec>& covers, std::uint64_t p, std::uint64_t l,
                                            FiberMode mode, std::size_t limit = kTorsionPointCap);

/// All n in [0, M) with xi^n = zeta (and n*tau = sigma) mod l; nullopt when
/// there are none.
std::optional<GoodClasses> transfer(const TorsionWitness& w, const BasePoint& base);

struct FiberRecord {
  std::vector<std::uint64_t> coeffs;   // low-to-high over F_l
  std::vector<unsigned> factor_degrees;
  bool operator==(const FiberRecord&) const = default;
};

struct ProgressionCertificate {
  FiberMode mode = FiberMode::NoRationalPoint;
  std::uint64_t l = 0;
  std::uint64_t M = 0;
  std::vector<std::uint64_t> residues;
  std::vector<std::vector<FiberRecord>> fibers;  // [residue][cover]
  std::vector<std::string> cover_digests;
  std::string base_digest;
  std::uint64_t seed = 0;
  bool operator==(const ProgressionCertificate&) const = default;
};

enum class Strategy { Both, Torsion, Exhaustive };
std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct ProgressionConfig {
  FiberMode mode = FiberMode::NoRationalPoint;
  std::uint64_t min_prime = 3;
  std::uint64_t max_prime = 100'000;
  std::uint64_t max_modulus = 10'000'000;
  std::vector<std::uint64_t> torsion_orders{3, 5, 7, 11, 13};
  Strategy strategy = Strategy::Both;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::size_t max_residues = 4096;  // residues recorded in a certificate
};

struct ProgressionFound {
  ProgressionCertificate cert;
  SearchTrace trace;
};

/// Certificate from the least prime with a nonempty good set.  Throws
/// PreconditionFailed when xi is multiplicatively dependent or covers is empty.
std::variant<ProgressionFound, Exhausted> find_progression(const std::vector<CoverSpec>& covers,
                                                           const BasePoint& base, const ProgressionConfig& cfg);

/// Independent recomputation mod l plus the exact check over Q for every
/// certified n <= exact_bound.  Verifier-side code only.
VerifyResult verify_certificate(const ProgressionCertificate& cert, const std::vector<CoverSpec>& covers,
                                const BasePoint& base, std::uint64_t exact_bound);

/// The exact fiber f(xi^n, n*tau, y) over Q as a univariate in y.
QPoly exact_fiber(const CoverSpec& c, const BasePoint& base, std::uint64_t n);

}  // namespace hitforge
