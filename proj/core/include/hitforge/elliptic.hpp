#pragma once

// Elliptic curves y^2 = x^3 + Ax + B over Q and F_l, Frobenius data at small
// primes, and progressions n on which the fibers of covers of E over nP are
// obstructed mod l.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hitforge/mpoly.hpp"
#include "hitforge/search_trace.hpp"
#include "hitforge/torus.hpp"
#include "hitforge/verdict.hpp"

namespace hitforge {

struct EllipticCurveQ {
  Rat A, B;
  bool operator==(const EllipticCurveQ&) const = default;
};

/// -16 (4A^3 + 27B^2).
Rat discriminant(const EllipticCurveQ& E);

/// Throws InputError when the discriminant vanishes.
EllipticCurveQ make_curve(const Rat& A, const Rat& B);

struct PointQ {
  bool infinity = true;
  Rat x, y;
  bool operator==(const PointQ&) const = default;
};

PointQ rational_point(const Rat& x, const Rat& y);
bool on_curve(const EllipticCurveQ& E, const PointQ& P);
PointQ ec_neg(const PointQ& P);
PointQ ec_add(const EllipticCurveQ& E, const PointQ& P, const PointQ& Q);
PointQ ec_mul(const EllipticCurveQ& E, std::uint64_t n, const PointQ& P);

/// nP != O for n in {1..10, 12}; by Mazur these are the only torsion orders
/// over Q.
bool is_non_torsion(const EllipticCurveQ& E, const PointQ& P);

struct CurveFl {
  std::uint64_t l = 0;
  std::uint64_t a = 0, b = 0;
  bool operator==(const CurveFl&) const = default;
};

struct PointFl {
  bool infinity = true;
  std::uint64_t x = 0, y = 0;
  bool operator==(const PointFl&) const = default;
};

PointFl affine_point(std::uint64_t x, std::uint64_t y);
bool on_curve(const CurveFl& E, const PointFl& P);
PointFl ec_neg(const CurveFl& E, const PointFl& P);
PointFl ec_add(const CurveFl& E, const PointFl& P, const PointFl& Q);
PointFl ec_mul(const CurveFl& E, std::uint64_t n, const PointFl& P);

struct BadReduction {
  std::string reason;
};

/// Requires l > 3 prime (PreconditionFailed).  BadReduction when l divides a
/// denominator of A or B or the reduced discriminant vanishes.
std::variant<CurveFl, BadReduction> ec_reduce(const EllipticCurveQ& E, std::uint64_t l);

/// O when l divides a denominator of P.
PointFl ec_reduce_point(const PointQ& P, std::uint64_t l);

inline constexpr std::uint64_t kPointCountCap = std::uint64_t{1} << 20;

/// #E(F_l) by the quadratic character; BoundExceeded above kPointCountCap.
std::uint64_t ec_count_points(const CurveFl& E);

/// Every point of E(F_l), O first.
std::vector<PointFl> ec_points(const CurveFl& E);

/// Exact order, by stripping prime factors off a multiple N of it.
std::uint64_t ec_point_order(const CurveFl& E, const PointFl& P, std::uint64_t N);

struct FrobeniusData {
  std::uint64_t l = 0;
  std::uint64_t N1 = 0;
  std::int64_t a_l = 0;          // l + 1 - N1
  std::vector<Int> gamma;        // gamma[m - 1] = #E(F_{l^m}), m = 1..m_max
  std::uint64_t shape_a = 0;     // E(F_l) = Z/a + Z/b, a | b
  std::uint64_t shape_b = 0;
};

inline constexpr std::uint64_t kGroupShapeCap = std::uint64_t{1} << 16;

/// gamma_m = l^m + 1 - s_m with s_m = a_l s_{m-1} - l s_{m-2}.  The group
/// shape comes from the exponent (lcm of all point orders), so l is capped
/// at kGroupShapeCap (BoundExceeded).
FrobeniusData ec_frobenius(const EllipticCurveQ& E, std::uint64_t l, unsigned m_max = 2);

/// A polynomial in X, Y (point coordinates) and the fiber variable T.
struct FiberSpec {
  MPolyQ f;  // primitive-integral
  unsigned d = 0;
};

/// Throws InputError unless only X, Y, T appear and deg_T >= 1.
FiberSpec make_fiber(const MPolyQ& f);

/// Desk-scale (PB) surrogate: for d = 2 the T-discriminant must not be a
/// square up to a constant; otherwise an absolute irreducibility witness is
/// required.  nullopt when the fiber passes, else the reason.
std::optional<std::string> ec_fiber_gate(const FiberSpec& fiber);

/// Residues n in [1, M), M = ord(P mod l), with nP != O mod l and every fiber
/// over nP good mod l.
std::variant<GoodClasses, BadPrime> ec_orbit_scan(const EllipticCurveQ& E, const PointQ& P,
                                                  const std::vector<FiberSpec>& fibers, std::uint64_t l,
                                                  FiberMode mode);

struct EllCertificate {
  FiberMode mode = FiberMode::NoRationalPoint;
  std::uint64_t l = 0;
  std::uint64_t M = 0;
  std::vector<std::uint64_t> residues;
  std::vector<std::vector<FiberRecord>> fibers;  // [residue][fiber]
  EllipticCurveQ curve;
  PointQ point;
  std::vector<std::string> fiber_texts;
  std::uint64_t seed = 0;
  bool operator==(const EllCertificate&) const = default;
};

struct EllConfig {
  FiberMode mode = FiberMode::NoRationalPoint;
  std::uint64_t min_prime = 5;
  std::uint64_t max_prime = 10'000;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::size_t max_residues = 4096;
};

struct EllFound {
  EllCertificate cert;
  SearchTrace trace;
};

/// Throws PreconditionFailed when P is off the curve or torsion, fibers is
/// empty, or a fiber fails ec_fiber_gate.
std::variant<EllFound, Exhausted> ec_find_progression(const EllipticCurveQ& E, const PointQ& P,
                                                      const std::vector<FiberSpec>& fibers, const EllConfig& cfg);

/// Recomputes the certified residues mod l, then for every certified
/// n <= exact_bound computes nP over Q and runs the rational root test.  In
/// IrreducibleFiber mode the exact check covers d <= 3 only.
VerifyResult ec_verify(const EllCertificate& cert, const EllipticCurveQ& E, const PointQ& P,
                       const std::vector<FiberSpec>& fibers, std::uint64_t exact_bound = 8);

}  // namespace hitforge
