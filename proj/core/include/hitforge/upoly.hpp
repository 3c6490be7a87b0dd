#pragma once

// Dense univariate polynomials over a finite field (PrimeField or ExtField)
// with squarefree / distinct-degree / Cantor-Zassenhaus factorization.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hitforge/arith.hpp"
#include "hitforge/errors.hpp"

namespace hitforge {

template <class F>
struct UPoly {
  using Elem = typename F::Elem;
  std::vector<Elem> c;  // low-to-high, no trailing zeros

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Elem& lead() const { return c.back(); }
  bool operator==(const UPoly&) const = default;
};

template <class F>
struct UFactor {
  UPoly<F> poly;  // monic irreducible
  unsigned multiplicity = 1;
};

template <class F>
struct UFactorization {
  typename F::Elem unit;
  std::vector<UFactor<F>> factors;
};

namespace upoly {

template <class F>
void trim(const F& f, UPoly<F>& a) {
  while (!a.c.empty() && f.is_zero(a.c.back())) a.c.pop_back();
}

template <class F>
UPoly<F> make(const F& f, std::vector<typename F::Elem> coeffs) {
  UPoly<F> p{std::move(coeffs)};
  trim(f, p);
  return p;
}

template <class F>
UPoly<F> constant(const F& f, const typename F::Elem& v) {
  return make(f, {v});
}

template <class F>
UPoly<F> monomial_x(const F& f) {
  return UPoly<F>{{f.zero(), f.one()}};
}

template <class F>
UPoly<F> add(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
  UPoly<F> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), f.zero());
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (i < a.c.size() && i < b.c.size()) r.c[i] = f.add(a.c[i], b.c[i]);
    else if (i < a.c.size()) r.c[i] = a.c[i];
    else r.c[i] = b.c[i];
  }
  trim(f, r);
  return r;
}

template <class F>
UPoly<F> neg(const F& f, const UPoly<F>& a) {
  UPoly<F> r = a;
  for (auto& x : r.c) x = f.neg(x);
  return r;
}

template <class F>
UPoly<F> sub(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
  return add(f, a, neg(f, b));
}

template <class F>
UPoly<F> scale(const F& f, const UPoly<F>& a, const typename F::Elem& k) {
  UPoly<F> r = a;
  for (auto& x : r.c) x = f.mul(x, k);
  trim(f, r);
  return r;
}

template <class F>
UPoly<F> mul(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  UPoly<F> r;
  r.c.assign(a.c.size() + b.c.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (f.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
  }
  trim(f, r);
  return r;
}

/// a = q*b + r with deg r < deg b.
template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
  if (b.is_zero()) throw Error("upoly::divmod: division by zero polynomial");
  UPoly<F> r = a;
  if (a.degree() < b.degree()) return {UPoly<F>{}, r};
  UPoly<F> q;
  q.c.assign(a.c.size() - b.c.size() + 1, f.zero());
  const auto inv_lead = f.inv(b.lead());
  const std::size_t db = b.c.size() - 1;
  for (std::size_t k = r.c.size(); k-- > db;) {
    if (f.is_zero(r.c[k])) continue;
    const auto coef = f.mul(r.c[k], inv_lead);
    q.c[k - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) r.c[k - db + j] = f.sub(r.c[k - db + j], f.mul(coef, b.c[j]));
  }
  trim(f, q);
  trim(f, r);
  return {q, r};
}

template <class F>
UPoly<F> mod(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
  return divmod(f, a, b).second;
}

template <class F>
UPoly<F> monic(const F& f, const UPoly<F>& a) {
  if (a.is_zero()) return a;
  return scale(f, a, f.inv(a.lead()));
}

/// Monic gcd (zero iff both inputs are zero).
template <class F>
UPoly<F> gcd(const F& f, UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

template <class F>
UPoly<F> derivative(const F& f, const UPoly<F>& a) {
  UPoly<F> r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = f.mul(a.c[i], f.from_u64(i));
  trim(f, r);
  return r;
}

template <class F>
typename F::Elem eval(const F& f, const UPoly<F>& a, const typename F::Elem& x) {
  auto acc = f.zero();
  for (std::size_t i = a.c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.c[i]);
  return acc;
}

template <class F>
UPoly<F> mulmod_poly(const F& f, const UPoly<F>& a, const UPoly<F>& b, const UPoly<F>& m) {
  return mod(f, mul(f, a, b), m);
}

template <class F>
UPoly<F> powmod(const F& f, UPoly<F> base, const Int& e, const UPoly<F>& m) {
  UPoly<F> result = mod(f, constant(f, f.one()), m);
  base = mod(f, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod_poly(f, result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod_poly(f, result, base, m);
  }
  return result;
}

template <class F>
bool is_one(const F& f, const UPoly<F>& a) {
  return a.c.size() == 1 && a.c[0] == f.one();
}

/// Squarefree decomposition of a monic polynomial: pairs (part, multiplicity).
template <class F>
std::vector<std::pair<UPoly<F>, unsigned>> squarefree(const F& f, const UPoly<F>& a) {
  std::vector<std::pair<UPoly<F>, unsigned>> out;
  if (a.degree() <= 0) return out;
  const std::uint64_t p = f.characteristic();
  auto c = gcd(f, a, derivative(f, a));
  auto w = divmod(f, a, c).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    auto y = gcd(f, w, c);
    auto fac = divmod(f, w, y).first;
    if (fac.degree() > 0) out.emplace_back(monic(f, fac), i);
    w = y;
    c = divmod(f, c, y).first;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a p-th power: take the p-th root coefficientwise.
    UPoly<F> root;
    for (std::size_t k = 0; k < c.c.size(); k += p) root.c.push_back(f.pth_root(c.c[k]));
    trim(f, root);
    for (auto& [g, m] : squarefree(f, monic(f, root))) out.emplace_back(g, m * static_cast<unsigned>(p));
  }
  return out;
}

/// Distinct-degree split of a monic squarefree polynomial.
template <class F>
std::vector<std::pair<UPoly<F>, unsigned>> distinct_degree(const F& f, UPoly<F> a) {
  std::vector<std::pair<UPoly<F>, unsigned>> out;
  const Int q = f.order();
  const auto x = monomial_x(f);
  UPoly<F> h = mod(f, x, a);
  unsigned i = 1;
  while (a.degree() >= 2 * static_cast<int>(i)) {
    h = powmod(f, h, q, a);
    auto g = gcd(f, a, sub(f, h, x));
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      a = divmod(f, a, g).first;
      h = mod(f, h, a);
    }
    ++i;
  }
  if (a.degree() > 0) out.emplace_back(monic(f, a), static_cast<unsigned>(a.degree()));
  return out;
}

/// Cantor-Zassenhaus equal-degree split of a monic squarefree product of
/// irreducibles of degree k.
template <class F>
void equal_degree(const F& f, const UPoly<F>& a, unsigned k, std::mt19937_64& rng,
                  std::vector<UPoly<F>>& out) {
  const int n = a.degree();
  if (n <= static_cast<int>(k)) {
    out.push_back(a);
    return;
  }
  const Int q = f.order();
  Int qk;
  mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
  const bool even = f.characteristic() == 2;
  for (;;) {
    UPoly<F> r;
    for (int i = 0; i < n; ++i) r.c.push_back(f.random(rng));
    trim(f, r);
    if (r.degree() < 1) continue;
    auto g = gcd(f, a, r);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(f, g, k, rng, out);
      equal_degree(f, divmod(f, a, g).first, k, rng, out);
      return;
    }
    UPoly<F> b;
    if (!even) {
      b = sub(f, powmod(f, r, (qk - 1) / 2, a), constant(f, f.one()));
    } else {
      // Trace to F_2: sum of r^(2^j), j < k * [F:F_2].
      const unsigned steps = k * f.degree();
      UPoly<F> t = mod(f, r, a);
      b = t;
      for (unsigned j = 1; j < steps; ++j) {
        t = mulmod_poly(f, t, t, a);
        b = add(f, b, t);
      }
    }
    g = gcd(f, a, b);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(f, g, k, rng, out);
      equal_degree(f, divmod(f, a, g).first, k, rng, out);
      return;
    }
  }
}

template <class F>
bool poly_less(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c.rbegin(), a.c.rend(), b.c.rbegin(), b.c.rend());
}

/// Full factorization; deterministic for a given seed.
template <class F>
UFactorization<F> factor(const F& f, const UPoly<F>& a, std::uint64_t seed = 0) {
  if (a.is_zero()) throw PreconditionFailed("factor: zero polynomial");
  UFactorization<F> out{a.lead(), {}};
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (auto& [part, mult] : squarefree(f, monic(f, a))) {
    for (auto& [block, deg] : distinct_degree(f, part)) {
      std::vector<UPoly<F>> pieces;
      equal_degree(f, block, deg, rng, pieces);
      for (auto& piece : pieces) out.factors.push_back({monic(f, piece), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const UFactor<F>& x, const UFactor<F>& y) {
    if (poly_less(x.poly, y.poly)) return true;
    if (poly_less(y.poly, x.poly)) return false;
    return x.multiplicity < y.multiplicity;
  });
  return out;
}

/// Rabin's test: a of degree n >= 1 is irreducible iff x^(q^n) = x mod a and
/// gcd(x^(q^(n/r)) - x, a) = 1 for every prime r | n.
template <class F>
bool is_irreducible(const F& f, const UPoly<F>& a) {
  const int n = a.degree();
  if (n < 1) throw PreconditionFailed("is_irreducible: degree must be >= 1");
  if (n == 1) return true;
  const auto m = monic(f, a);
  const Int q = f.order();
  const auto x = monomial_x(f);
  std::vector<UPoly<F>> frob(n + 1);  // frob[i] = x^(q^i) mod m
  frob[0] = mod(f, x, m);
  for (int i = 1; i <= n; ++i) frob[i] = powmod(f, frob[i - 1], q, m);
  if (!(sub(f, frob[n], frob[0]).is_zero())) return false;
  for (auto [r, e] : factorize_u64(static_cast<std::uint64_t>(n))) {
    auto g = gcd(f, m, sub(f, frob[n / r], x));
    if (g.degree() > 0) return false;
  }
  return true;
}

/// True iff a has a root in the base field.
template <class F>
bool has_root(const F& f, const UPoly<F>& a) {
  if (a.degree() < 1) return false;
  if (f.is_zero(a.c[0])) return true;
  const auto m = monic(f, a);
  const auto x = monomial_x(f);
  auto xq = powmod(f, x, f.order(), m);
  return gcd(f, m, sub(f, xq, x)).degree() > 0;
}

/// Degrees of the irreducible factors (with multiplicity), sorted.
template <class F>
std::vector<unsigned> factor_degrees(const UFactorization<F>& fz) {
  std::vector<unsigned> out;
  for (const auto& fac : fz.factors) {
    for (unsigned i = 0; i < fac.multiplicity; ++i) out.push_back(static_cast<unsigned>(fac.poly.degree()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class F>
UPoly<F> expand(const F& f, const UFactorization<F>& fz) {
  UPoly<F> acc = constant(f, fz.unit);
  for (const auto& fac : fz.factors) {
    for (unsigned i = 0; i < fac.multiplicity; ++i) acc = mul(f, acc, fac.poly);
  }
  return acc;
}

}  // namespace upoly
}  // namespace hitforge
