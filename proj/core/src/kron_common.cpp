#include <algorithm>
#include <numeric>
#include <set>

#include "hitforge/kron.hpp"

namespace hitforge {

namespace {

unsigned torus_rank(const MPolyQ& f) {
  unsigned r = 0;
  for (Var v : f.variables()) {
    if (is_torus_var(v)) r = std::max(r, static_cast<unsigned>(var_index(v)) + 1);
  }
  return r;
}

void check_shape(const MPolyQ& f, const std::vector<std::int64_t>& a) {
  for (Var v : f.variables()) {
    if (v == Var::y) continue;
    if (!is_torus_var(v) || var_index(v) >= a.size()) {
      throw PreconditionFailed("kron_substitute: no exponent for " + std::string(var_name(v)));
    }
  }
  for (auto e : a) {
    if (e == 0) throw PreconditionFailed("kron_substitute: exponents must be nonzero");
  }
}

__int128 t_exponent(const Monomial& m, const std::vector<std::int64_t>& a) {
  __int128 e = 0;
  for (std::size_t i = 0; i < a.size(); ++i) e += static_cast<__int128>(a[i]) * m[i];
  return e;
}

Monomial ty_monomial(__int128 t, std::uint32_t y) {
  if (t < 0 || t > std::numeric_limits<std::uint32_t>::max()) throw BoundExceeded("kron_substitute: t-degree too large");
  Monomial out{};
  out[var_index(Var::t)] = static_cast<std::uint32_t>(t);
  out[var_index(Var::y)] = y;
  return out;
}

__int128 laurent_shift(const std::vector<__int128>& exps) {
  const __int128 lo = exps.empty() ? 0 : *std::min_element(exps.begin(), exps.end());
  return lo < 0 ? -lo : 0;
}

}  // namespace

KronSubstitution kron_substitute(const MPolyQ& f, const std::vector<std::int64_t>& exponents) {
  check_shape(f, exponents);
  std::vector<__int128> exps;
  for (const auto& [m, c] : f.terms()) exps.push_back(t_exponent(m, exponents));
  const __int128 shift = laurent_shift(exps);
  KronSubstitution out;
  out.shift = static_cast<std::int64_t>(shift);
  std::set<Monomial, GrlexGreater> seen;
  std::size_t i = 0;
  for (const auto& [m, c] : f.terms()) {
    const Monomial tm = ty_monomial(exps[i++] + shift, m[var_index(Var::y)]);
    if (!seen.insert(tm).second) out.collapsed = true;
    out.g.add_term(tm, c);
  }
  if (torus_rank(f) > 0 && !out.g.involves(Var::t)) out.collapsed = true;
  return out;
}

std::variant<MPolyFp, BadPrime> kron_substitute_mod(const MPolyQ& f, const std::vector<std::int64_t>& exponents,
                                                    const std::vector<std::uint64_t>& theta, std::uint64_t l) {
  check_shape(f, exponents);
  if (theta.size() < exponents.size()) throw PreconditionFailed("kron_substitute_mod: one theta per exponent");
  auto red = reduce_mod(f, l);
  if (auto* bad = std::get_if<BadPrime>(&red)) return *bad;
  const auto& fp = std::get<MPolyFp>(red);
  std::vector<__int128> exps;
  for (const auto& [m, c] : fp.terms) exps.push_back(t_exponent(m, exponents));
  const __int128 shift = laurent_shift(exps);
  MPolyFp out;
  out.l = l;
  out.main = Var::y;
  std::size_t i = 0;
  for (const auto& [m, c] : fp.terms) {
    std::uint64_t coef = c;
    for (std::size_t j = 0; j < exponents.size(); ++j) coef = mulmod(coef, powmod(theta[j], m[j], l), l);
    auto& slot = out.terms[ty_monomial(exps[i++] + shift, m[var_index(Var::y)])];
    slot = (slot + coef) % l;
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool discriminant_square_mod(const MPolyFp& g) {
  if (g.degree(Var::y) != 2) throw PreconditionFailed("discriminant_square_mod: quadratic in y required");
  const PrimeField F(g.l);
  std::vector<std::vector<std::uint64_t>> coeff(3);
  for (const auto& [m, c] : g.terms) {
    auto& row = coeff[m[var_index(Var::y)]];
    const auto e = m[var_index(Var::t)];
    if (row.size() <= e) row.resize(e + 1, 0);
    row[e] = F.add(row[e], c);
  }
  const auto a = upoly::make(F, coeff[2]), b = upoly::make(F, coeff[1]), c = upoly::make(F, coeff[0]);
  const auto disc = upoly::sub(F, upoly::mul(F, b, b), upoly::scale(F, upoly::mul(F, a, c), F.from_u64(4)));
  if (disc.is_zero()) return true;
  const auto fz = upoly::factor(F, disc, 0);
  return std::all_of(fz.factors.begin(), fz.factors.end(), [](const auto& fac) { return fac.multiplicity % 2 == 0; });
}

std::vector<std::int64_t> kronecker_exponents(unsigned m, unsigned r) {
  std::vector<std::int64_t> out;
  __int128 p = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (p > (static_cast<__int128>(1) << 62)) throw BoundExceeded("Kronecker exponent m^" + std::to_string(i) + " too large");
    out.push_back(static_cast<std::int64_t>(p));
    p *= m;
  }
  return out;
}

std::uint64_t default_subgroup_prime(const std::vector<unsigned>& orders) {
  std::uint64_t L = 1;
  for (unsigned h : orders) L = std::lcm<std::uint64_t>(L, std::max(1u, h));
  std::uint64_t l = 1000 - (1000 % L) + 1;
  while (l < 1000 || !is_prime(l)) l += L;
  return l;
}

}  // namespace hitforge
