#pragma once

// Exact integer/rational arithmetic and the elementary number-theory kernels
// (primality, factorization, CRT, orders, discrete logs, power residues,
// multiplicative independence) shared by every engine.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hitforge {

using Int = mpz_class;
using Rat = mpq_class;

/// sign * prod p^e.  `factors` is empty for 0 and +-1.
struct FactoredInt {
  int sign = 0;
  std::map<Int, unsigned> factors;

  Int value() const;
  bool operator==(const FactoredInt&) const = default;
};

/// Residue `residue` modulo `modulus`, normalized to 0 <= residue < modulus.
struct CongruenceClass {
  Int residue;
  Int modulus;

  bool operator==(const CongruenceClass&) const = default;
};

struct FactorOptions {
  unsigned max_bits = 128;
  std::uint64_t rho_budget = 10'000'000;  // iterations per cofactor
};

// ---- primality / factorization --------------------------------------------

bool is_prime(std::uint64_t n);
bool is_prime(const Int& n);

/// Complete factorization: trial division below 10^6, then Pollard rho
/// (Brent) with a fixed seed sequence.  Throws BoundExceeded when |n| is
/// wider than `opts.max_bits` or a cofactor resists the rho budget.
FactoredInt factorize(const Int& n, const FactorOptions& opts = {});

/// Factorization of a machine word; same algorithm, no bignum traffic.
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

/// All primes p with lo <= p <= hi.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

// ---- congruences ------------------------------------------------------------

CongruenceClass make_class(const Int& residue, const Int& modulus);

/// The class mod lcm(moduli) meeting every input class, or nullopt when the
/// system is inconsistent.  An empty list yields 0 mod 1.
std::optional<CongruenceClass> crt(std::span<const CongruenceClass> classes);

// ---- arithmetic mod a word-sized prime -------------------------------------

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
std::uint64_t mod_of(const Int& a, std::uint64_t m);

/// x mod l for a rational, or nullopt when l divides the denominator.
std::optional<std::uint64_t> reduce_rational(const Rat& x, std::uint64_t l);

/// Least t >= 1 with g^t = 1 (mod l).  Requires l prime, l not dividing g.
std::uint64_t mult_order(std::uint64_t g, std::uint64_t l);
std::uint64_t mult_order(const Int& g, std::uint64_t l);

/// Least primitive root modulo the prime l.
std::uint64_t primitive_root(std::uint64_t l);

/// Least n >= 0 with g^n = h (mod l), or nullopt when h is not in <g>.
/// Pohlig-Hellman with baby-step/giant-step leaves; throws BoundExceeded if a
/// prime-order leaf exceeds `leaf_budget`.
std::optional<std::uint64_t> discrete_log(std::uint64_t g, std::uint64_t h, std::uint64_t l,
                                          std::uint64_t leaf_budget = std::uint64_t{1} << 40);

/// True iff a is a d-th power in F_l^*.
bool dth_power_residue(std::uint64_t a, std::uint64_t d, std::uint64_t l);

// ---- multiplicative independence over Q ------------------------------------

struct Independent {};
struct Dependent {
  std::vector<Int> exponents;  // prod x_i^{e_i} = 1, not all zero
};
using IndependenceVerdict = std::variant<Independent, Dependent>;

/// Decides whether nonzero rationals are multiplicatively independent, via
/// the integer kernel of their valuation matrix plus a sign row.
IndependenceVerdict mult_independent(std::span<const Rat> xs, const FactorOptions& opts = {});

/// prod xs[i]^e[i], exactly.
Rat multiplicative_combination(std::span<const Rat> xs, std::span<const Int> e);

// ---- misc -------------------------------------------------------------------

Rat parse_rational(const std::string& text);
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace hitforge
