#pragma once

// Integer linear recurrences u_{n+k} = c1 u_{n+k-1} + ... + ck u_n and
// progressions of n on which u_n + e is never a d-th power, certified by a
// single prime l.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hitforge/mpoly.hpp"
#include "hitforge/search_trace.hpp"
#include "hitforge/verdict.hpp"

namespace hitforge {

struct RecurrenceSpec {
  std::vector<Int> coeffs;   // c1..ck, ck != 0
  std::vector<Int> initial;  // u0..u_{k-1}
  Int shift = 0;             // e
  unsigned power = 2;        // d
  bool operator==(const RecurrenceSpec&) const = default;

  std::size_t order() const { return coeffs.size(); }
};

/// Throws InputError unless k >= 1, ck != 0, |initial| = k and d >= 2.
RecurrenceSpec make_recurrence(std::vector<Int> coeffs, std::vector<Int> initial, Int shift, unsigned power);

/// u_n = alpha^n-style sequence of a quadratic integer and its conjugate:
/// characteristic polynomial x^2 - trace x + norm.
RecurrenceSpec rec_from_quadratic(const Int& trace, const Int& norm, const Int& u0, const Int& u1, const Int& e,
                                  unsigned d);

/// Repeated characteristic roots, or two roots whose ratio is a root of unity.
bool is_degenerate(const RecurrenceSpec& spec);

/// "coeffs=4,-5;init=2,4;shift=1;power=2"
std::string canonical_text(const RecurrenceSpec& spec);
std::string digest_of(const RecurrenceSpec& spec);

inline constexpr std::uint64_t kRecEvalCap = 1'000'000;

/// Exact u_n by iteration; BoundExceeded past kRecEvalCap.
Int rec_eval(const RecurrenceSpec& spec, std::uint64_t n);

/// Period and residues n mod P with u_n + e neither 0 nor a d-th power mod l.
struct PowerClasses {
  std::uint64_t P = 1;
  std::vector<std::uint64_t> residues;  // ascending
};

/// BadPrime when l divides ck.  BoundExceeded when the period passes max_period.
std::variant<PowerClasses, BadPrime> rec_mod_scan(const RecurrenceSpec& spec, std::uint64_t l,
                                                  std::uint64_t max_period = 10'000'000);

struct PowerCertificate {
  std::uint64_t l = 0;
  std::uint64_t P = 0;
  std::vector<std::uint64_t> residues;
  std::vector<std::uint64_t> values;  // (u_n + e) mod l per residue
  RecurrenceSpec spec;
  std::string spec_digest;
  bool operator==(const PowerCertificate&) const = default;
};

struct RecConfig {
  std::uint64_t min_prime = 3;
  std::uint64_t max_prime = 100'000;
  std::uint64_t max_period = 10'000'000;
  unsigned jobs = 1;
  std::size_t max_residues = 4096;
};

struct PowerFound {
  PowerCertificate cert;
  SearchTrace trace;
  bool degenerate = false;
};

/// Scans primes with d | l - 1 first, then those with 1 < gcd(d, l - 1) < d;
/// primes with gcd(d, l - 1) = 1 are never tried since every unit is then a
/// d-th power.
std::variant<PowerFound, Exhausted> find_power_free_progression(const RecurrenceSpec& spec, const RecConfig& cfg);

/// Recomputes the residue table mod l, then runs an exact d-th root test on
/// u_n + e for every certified n <= exact_bound.
VerifyResult verify_power_certificate(const PowerCertificate& cert, const RecurrenceSpec& spec,
                                      std::uint64_t exact_bound);

}  // namespace hitforge
