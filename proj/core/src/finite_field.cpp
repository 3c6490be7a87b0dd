#include "hitforge/finite_field.hpp"

#include "hitforge/errors.hpp"
#include "hitforge/upoly.hpp"

namespace hitforge {

PrimeField::Elem PrimeField::pow(Elem a, const Int& e) const {
  Elem result = one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

namespace {

Int power_of(std::uint64_t l, unsigned e) {
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), l, e);
  return q;
}

}  // namespace

FieldDescriptor ext_field(std::uint64_t l, unsigned e, std::uint64_t budget) {
  if (e < 1) throw InputError("ext_field: degree must be >= 1");
  if (!is_prime(l)) throw InputError("ext_field: characteristic must be prime");
  if (power_of(l, e) > Int(static_cast<unsigned long>(budget))) {
    throw BoundExceeded("ext_field: " + std::to_string(l) + "^" + std::to_string(e) + " exceeds field budget");
  }
  FieldDescriptor fd{l, e, {}};
  if (e == 1) return fd;
  const PrimeField base(l);
  std::vector<std::uint64_t> digits(e, 0);
  for (;;) {
    UPoly<PrimeField> cand;
    cand.c = digits;
    cand.c.push_back(1);
    if (upoly::is_irreducible(base, cand)) {
      fd.modulus = cand.c;
      return fd;
    }
    std::size_t i = 0;
    while (i < e && ++digits[i] == l) digits[i++] = 0;
    if (i == e) throw Error("ext_field: no irreducible polynomial found");
  }
}

bool descriptor_valid(const FieldDescriptor& fd) {
  if (!is_prime(fd.l) || fd.e < 1) return false;
  if (fd.e == 1) return fd.modulus.empty();
  if (fd.modulus.size() != fd.e + 1 || fd.modulus.back() != 1) return false;
  const PrimeField base(fd.l);
  for (auto c : fd.modulus) {
    if (c >= fd.l) return false;
  }
  return upoly::is_irreducible(base, UPoly<PrimeField>{fd.modulus});
}

ExtField::ExtField(FieldDescriptor fd) : fd_(std::move(fd)), base_(fd_.l), order_(power_of(fd_.l, fd_.e)) {
  if (fd_.e > 1 && fd_.modulus.size() != fd_.e + 1) throw InputError("ExtField: malformed modulus");
}

ExtField::Elem ExtField::one() const {
  Elem r = zero();
  r[0] = 1 % fd_.l;
  return r;
}

ExtField::Elem ExtField::from_u64(std::uint64_t v) const {
  Elem r = zero();
  r[0] = v % fd_.l;
  return r;
}

bool ExtField::is_zero(const Elem& a) const {
  for (auto x : a) {
    if (x != 0) return false;
  }
  return true;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r(fd_.e);
  for (unsigned i = 0; i < fd_.e; ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem r(fd_.e);
  for (unsigned i = 0; i < fd_.e; ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
  Elem r(fd_.e);
  for (unsigned i = 0; i < fd_.e; ++i) r[i] = base_.neg(a[i]);
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  const unsigned e = fd_.e;
  if (e == 1) return {base_.mul(a[0], b[0])};
  std::vector<std::uint64_t> t(2 * e - 1, 0);
  for (unsigned i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < e; ++j) t[i + j] = base_.add(t[i + j], base_.mul(a[i], b[j]));
  }
  for (unsigned k = 2 * e - 1; k-- > e;) {
    const std::uint64_t c = t[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < e; ++j) t[k - e + j] = base_.sub(t[k - e + j], base_.mul(c, fd_.modulus[j]));
  }
  t.resize(e);
  return t;
}

ExtField::Elem ExtField::pow(const Elem& a, const Int& e) const {
  Elem result = one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw Error("ExtField::inv: zero has no inverse");
  return pow(a, order_ - 2);
}

ExtField::Elem ExtField::pth_root(const Elem& a) const {
  // Frobenius has order e, so its inverse is x -> x^(l^(e-1)).
  return pow(a, power_of(fd_.l, fd_.e - 1));
}

ExtField::Elem ExtField::random(std::mt19937_64& rng) const {
  Elem r(fd_.e);
  for (auto& x : r) x = rng() % fd_.l;
  return r;
}

std::uint64_t ExtField::index(const Elem& a) const {
  std::uint64_t idx = 0;
  for (unsigned i = fd_.e; i-- > 0;) idx = idx * fd_.l + a[i];
  return idx;
}

ExtField::Elem ExtField::element(std::uint64_t idx) const {
  Elem r(fd_.e);
  for (unsigned i = 0; i < fd_.e; ++i) {
    r[i] = idx % fd_.l;
    idx /= fd_.l;
  }
  return r;
}

}  // namespace hitforge
