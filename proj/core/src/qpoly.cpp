#include <algorithm>

#include "hitforge/mpoly.hpp"

namespace hitforge {

QPoly to_qpoly(const MPolyQ& f, Var v) {
  QPoly out;
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (static_cast<Var>(i) != v && m[i] != 0) {
        throw PreconditionFailed("to_qpoly: polynomial involves " + std::string(var_name(static_cast<Var>(i))));
      }
    }
    const auto e = m[var_index(v)];
    if (out.c.size() <= e) out.c.resize(e + 1, Rat(0));
    out.c[e] += c;
  }
  qpoly::trim(out);
  return out;
}

namespace qpoly {

void trim(QPoly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  QPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error("qpoly::divmod: division by zero");
  QPoly r = a, q;
  if (a.degree() < b.degree()) return {q, r};
  q.c.assign(a.c.size() - b.c.size() + 1, Rat(0));
  const std::size_t db = b.c.size() - 1;
  for (std::size_t k = r.c.size(); k-- > db;) {
    if (r.c[k] == 0) continue;
    const Rat coef = r.c[k] / b.c.back();
    q.c[k - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) r.c[k - db + j] -= coef * b.c[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    const Rat lead = a.c.back();
    for (auto& x : a.c) x /= lead;
  }
  return a;
}

QPoly derivative(const QPoly& a) {
  QPoly r;
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(a.c[i] * static_cast<unsigned long>(i));
  trim(r);
  return r;
}

Rat eval(const QPoly& a, const Rat& x) {
  Rat acc = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * x + a.c[i];
  return acc;
}

std::vector<Int> primitive_integer(const QPoly& a) {
  Int lcm_den = 1, g = 0;
  for (const auto& x : a.c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Int> out;
  for (const auto& x : a.c) {
    Rat scaled = x * lcm_den;
    out.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) return out;
  if (out.back() < 0) g = -g;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

namespace {

int sign_of(const Rat& x) { return sgn(x); }

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, derivative(p)};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    for (auto& x : r.c) x = -x;
    chain.push_back(std::move(r));
  }
  return chain;
}

int variations(const std::vector<QPoly>& chain, const Rat& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sign_of(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Integer roots of a squarefree monic integer polynomial inside the integer
// range [lo + 1, hi], found by Sturm bisection on half-integer endpoints.
void integer_roots(const std::vector<QPoly>& chain, const QPoly& p, const Int& lo, const Int& hi,
                   std::vector<Int>& out) {
  const Rat half(1, 2);
  const int count = variations(chain, Rat(lo) + half) - variations(chain, Rat(hi) + half);
  if (count == 0) return;
  if (hi - lo == 1) {
    if (eval(p, Rat(hi)) == 0) out.push_back(hi);
    return;
  }
  Int mid;
  Int sum = lo + hi;
  mpz_fdiv_q_2exp(mid.get_mpz_t(), sum.get_mpz_t(), 1);
  integer_roots(chain, p, lo, mid, out);
  integer_roots(chain, p, mid, hi, out);
}

}  // namespace

std::vector<Rat> rational_roots(const QPoly& a) {
  if (a.is_zero()) throw PreconditionFailed("rational_roots: zero polynomial");
  std::vector<Rat> roots;
  std::vector<Int> coeffs = primitive_integer(a);
  std::size_t shift = 0;
  while (shift < coeffs.size() && coeffs[shift] == 0) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  const std::size_t d = coeffs.size() - 1;
  if (d >= 1) {
    // z = lead * y turns the polynomial monic with integer coefficients.
    const Int lead = coeffs.back();
    QPoly monic_poly;
    Int power = 1;
    std::vector<Int> scaled(d + 1);
    for (std::size_t i = d + 1; i-- > 0;) {
      // coefficient of z^i is a_i * lead^(d-1-i) for i < d, and 1 for i = d
      if (i == d) {
        scaled[i] = 1;
      } else {
        scaled[i] = coeffs[i] * power;
        power *= lead;
      }
    }
    for (const auto& x : scaled) monic_poly.c.emplace_back(x);
    Int bound = 0;
    for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, Int(abs(scaled[i])));
    bound += 1;
    const QPoly g = gcd(monic_poly, derivative(monic_poly));
    const QPoly sqf = g.degree() > 0 ? divmod(monic_poly, g).first : monic_poly;
    const auto chain = sturm_chain(sqf);
    std::vector<Int> zs;
    integer_roots(chain, sqf, -bound - 1, bound, zs);
    for (const auto& z : zs) {
      Rat y(z, lead);
      y.canonicalize();
      roots.push_back(y);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

bool has_rational_root(const QPoly& a) { return !rational_roots(a).empty(); }

}  // namespace qpoly
}  // namespace hitforge
