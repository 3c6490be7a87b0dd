#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hitforge/arith.hpp"

namespace hitforge {

/// F_l.  Elements are canonical residues in [0, l).
struct PrimeField {
  using Elem = std::uint64_t;

  std::uint64_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(prime) {}

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_u64(std::uint64_t v) const { return v % p; }
  Elem from_int(const Int& v) const { return mod_of(v, p); }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return a >= p - b ? a - (p - b) : a + b; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return mulmod(a, b, p); }
  Elem inv(Elem a) const { return invmod(a, p); }
  Elem pow(Elem a, std::uint64_t e) const { return powmod(a, e, p); }
  Elem pow(Elem a, const Int& e) const;
  Elem pth_root(Elem a) const { return a; }
  Elem random(std::mt19937_64& rng) const { return rng() % p; }

  std::uint64_t characteristic() const { return p; }
  unsigned degree() const { return 1; }
  Int order() const { return Int(static_cast<unsigned long>(p)); }
  std::uint64_t index(Elem a) const { return a; }
  Elem element(std::uint64_t idx) const { return idx; }
};

/// F_{l^e} presented as F_l[z]/(modulus).  `modulus` is monic, low-to-high,
/// of degree e; it is empty for the prime field (e == 1).
struct FieldDescriptor {
  std::uint64_t l = 2;
  unsigned e = 1;
  std::vector<std::uint64_t> modulus;

  bool operator==(const FieldDescriptor&) const = default;
};

inline constexpr std::uint64_t kDefaultFieldBudget = std::uint64_t{1} << 40;

/// Descriptor for F_{l^e} whose modulus is the first irreducible monic
/// polynomial of degree e when monic polynomials are enumerated by
/// sum c_i l^i ascending.  Throws BoundExceeded when l^e > budget.
FieldDescriptor ext_field(std::uint64_t l, unsigned e, std::uint64_t budget = kDefaultFieldBudget);

/// Checks a descriptor: l prime, modulus monic of degree e and irreducible.
bool descriptor_valid(const FieldDescriptor& fd);

/// Arithmetic in F_{l^e}.  Elements are coefficient vectors of length e.
class ExtField {
 public:
  using Elem = std::vector<std::uint64_t>;

  explicit ExtField(FieldDescriptor fd);

  const FieldDescriptor& descriptor() const { return fd_; }

  Elem zero() const { return Elem(fd_.e, 0); }
  Elem one() const;
  Elem from_u64(std::uint64_t v) const;
  Elem from_int(const Int& v) const { return from_u64(mod_of(v, fd_.l)); }
  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, std::uint64_t e) const { return pow(a, Int(static_cast<unsigned long>(e))); }
  Elem pow(const Elem& a, const Int& e) const;
  Elem pth_root(const Elem& a) const;
  Elem random(std::mt19937_64& rng) const;

  std::uint64_t characteristic() const { return fd_.l; }
  unsigned degree() const { return fd_.e; }
  Int order() const { return order_; }
  std::uint64_t index(const Elem& a) const;
  Elem element(std::uint64_t idx) const;

 private:
  FieldDescriptor fd_;
  PrimeField base_;
  Int order_;
};

}  // namespace hitforge
