#include <random>

#include "hitforge/pb_gate.hpp"

namespace hitforge {
namespace {

bool y_content_trivial(const MPolyQ& f) { return content_in(f, Var::y).is_constant(); }

std::vector<Var> base_variables(const MPolyQ& f) {
  std::vector<Var> out;
  for (Var v : f.variables()) {
    if (v != Var::y) out.push_back(v);
  }
  return out;
}

Int power_of(std::uint64_t l, unsigned e) {
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), l, e);
  return q;
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  Int n = q.get_num(), d = q.get_den(), rn, rd;
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rat(rn, rd);
}

// Exponent tuples 0 <= e_i <= bound_i, in lexicographic order.
bool next_tuple(std::vector<unsigned>& e, const std::vector<unsigned>& bound) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < bound[i]) {
      ++e[i];
      return true;
    }
    e[i] = 0;
  }
  return false;
}

MPolyQ product_of(const std::vector<std::pair<MPolyQ, unsigned>>& parts, const std::vector<unsigned>& e) {
  MPolyQ p = MPolyQ::constant(1);
  for (std::size_t i = 0; i < parts.size(); ++i) p = p * parts[i].first.pow(e[i]);
  return p;
}

Rat coefficient_at(const MPolyQ& p, const Monomial& m) {
  auto it = p.terms().find(m);
  return it == p.terms().end() ? Rat(0) : it->second;
}

MPolyQ determinant(std::vector<std::vector<MPolyQ>> a) {
  const std::size_t n = a.size();
  MPolyQ prev = MPolyQ::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return MPolyQ{};
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto q = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        if (!q) throw Error("internal: inexact Bareiss step");
        a[i][j] = *q;
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace

std::variant<AbsIrredWitness, Unknown> abs_irreducible(const MPolyQ& f, const AbsIrredOptions& opts) {
  const unsigned d = f.degree(Var::y);
  if (d < 1) throw PreconditionFailed("abs_irreducible: deg_y must be >= 1");
  if (!y_content_trivial(f)) return Unknown{"nontrivial y-content"};
  if (d == 1) return AbsIrredWitness{LinearWitness{}};
  const unsigned L = lcm_upto(d);
  const auto vars = base_variables(f);
  bool any_field = false;
  for (std::uint64_t l : primes_between(opts.min_prime, opts.max_prime)) {
    if (power_of(l, L) > Int(static_cast<unsigned long>(opts.field_budget))) break;
    any_field = true;
    auto red = reduce_mod(f, l);
    if (std::holds_alternative<BadPrime>(red)) continue;
    const auto& fp = std::get<MPolyFp>(red);
    const FieldDescriptor fd = ext_field(l, L, opts.field_budget);
    const ExtField F(fd);
    std::mt19937_64 rng(opts.seed ^ (l * 0x9e3779b97f4a7c15ULL));
    for (unsigned j = 0; j < opts.points_per_prime; ++j) {
      std::map<Var, ExtField::Elem> point;
      for (Var v : vars) point[v] = F.random(rng);
      auto sp = specialize(F, fp, point);
      if (!sp.degree_preserved || !upoly::is_irreducible(F, sp.poly)) continue;
      SpecializationWitness w{l, L, fd.modulus, {}, sp.poly.c};
      for (auto& [v, value] : point) w.point.emplace_back(v, value);
      return AbsIrredWitness{w};
    }
  }
  if (!any_field) return Unknown{"F_{l^" + std::to_string(L) + "} exceeds the field budget for every prime"};
  return Unknown{"no specialization witness for primes in [" + std::to_string(opts.min_prime) + ", " +
                 std::to_string(opts.max_prime) + "]"};
}

std::variant<AbsIrredWitness, Unknown> certify_abs_irreducible(const MPolyQ& f, const AbsIrredOptions& opts) {
  if (f.degree(Var::y) != 2) return abs_irreducible(f, opts);
  if (!y_content_trivial(f)) return Unknown{"nontrivial y-content"};
  MPolyQ disc = discriminant_quadratic(f, Var::y);
  if (square_up_to_constant(disc).is_square) return Unknown{"discriminant is a square: splits over Qbar"};
  return AbsIrredWitness{DiscriminantWitness{std::move(disc)}};
}

std::optional<MPolyQ> find_linear_factor(const MPolyQ& g, std::size_t max_candidates) {
  const auto a = g.coefficients_in(Var::y);
  const std::size_t d = a.size() - 1;
  if (d < 2) return std::nullopt;
  if (a[0].is_zero()) return MPolyQ::variable(Var::y);
  const auto u_parts = squarefree_decomposition(a[0]);
  const auto v_parts = squarefree_decomposition(a[d]);
  std::vector<unsigned> u_bound, v_bound;
  for (const auto& p : u_parts) u_bound.push_back(p.second);
  for (const auto& p : v_parts) v_bound.push_back(p.second);
  std::vector<unsigned> eu(u_parts.size(), 0);
  std::size_t tried = 0;
  do {
    const MPolyQ u0 = product_of(u_parts, eu);
    std::vector<unsigned> ev(v_parts.size(), 0);
    do {
      if (++tried > max_candidates) return std::nullopt;
      const MPolyQ v0 = product_of(v_parts, ev);
      // y = c * u0 / v0 is a root iff sum_k c^k a_k u0^k v0^(d-k) vanishes.
      std::vector<MPolyQ> t(d + 1);
      for (std::size_t k = 0; k <= d; ++k) t[k] = a[k] * u0.pow(static_cast<unsigned>(k)) * v0.pow(static_cast<unsigned>(d - k));
      std::size_t first = 0;
      while (t[first].is_zero()) ++first;
      const Monomial probe = t[first].leading_monomial();
      QPoly q;
      for (std::size_t k = 0; k <= d; ++k) q.c.push_back(coefficient_at(t[k], probe));
      qpoly::trim(q);
      for (const Rat& c : qpoly::rational_roots(q)) {
        if (c == 0) continue;
        MPolyQ sum;
        Rat ck = 1;
        for (std::size_t k = 0; k <= d; ++k, ck *= c) sum = sum + t[k] * ck;
        if (sum.is_zero()) return (v0 * MPolyQ::variable(Var::y) - u0 * c).primitive_integral();
      }
    } while (next_tuple(ev, v_bound));
  } while (next_tuple(eu, u_bound));
  return std::nullopt;
}

PBVerdict pb_check(const CoverSpec& c, const PBOptions& opts) {
  auto self = certify_abs_irreducible(c.f, opts.search);
  if (auto* u = std::get_if<Unknown>(&self)) {
    throw PreconditionFailed("pb_check: cover is not certified absolutely irreducible (" + u->reason + ")");
  }
  const unsigned d = c.d;
  const MPolyQ g = pullback(c.f, d);
  if (d == 1) return CertifiedPB{LinearWitness{}};
  if (d == 2) {
    const auto coeffs = g.coefficients_in(Var::y);
    const MPolyQ disc = discriminant_quadratic(g, Var::y);
    const auto sq = square_up_to_constant(disc);
    if (sq.is_square) {
      if (auto s = rational_sqrt(sq.constant)) {
        const MPolyQ y = MPolyQ::variable(Var::y);
        const MPolyQ linear = coeffs[2] * y * Rat(2) + coeffs[1] - sq.root * *s;
        return CertifiedNotPB{ExplicitFactor{2, gcd(g, linear)}};
      }
      return CertifiedNotPB{SquareDiscriminant{disc, sq.constant, sq.root}};
    }
    auto generic = abs_irreducible(g, opts.search);
    if (auto* w = std::get_if<AbsIrredWitness>(&generic)) return CertifiedPB{*w};
    return CertifiedPB{DiscriminantWitness{disc}};
  }
  if (auto lf = find_linear_factor(g, opts.max_candidates)) return CertifiedNotPB{ExplicitFactor{d, *lf}};
  auto generic = abs_irreducible(g, opts.search);
  if (auto* w = std::get_if<AbsIrredWitness>(&generic)) return CertifiedPB{*w};
  return Unknown{"pullback(f, " + std::to_string(d) + "): " + std::get<Unknown>(generic).reason};
}

MPolyQ torus_norm(const MPolyQ& P, unsigned k) {
  if (k <= 1) return P;
  MPolyQ acc = P;
  for (std::size_t i = 0; i <= var_index(Var::x9); ++i) {
    const Var x = torus_var(i);
    if (!acc.involves(x)) continue;
    // acc = sum_j x^j * parts[j](x^k); the matrix of multiplication by acc on
    // the basis 1, x, .., x^(k-1) over Q(x^k).
    std::vector<MPolyQ> parts(k);
    for (const auto& [m, c] : acc.terms()) {
      Monomial mm = m;
      const unsigned j = mm[i] % k;
      mm[i] -= j;
      parts[j].add_term(mm, c);
    }
    const MPolyQ X = MPolyQ::variable(x).pow(k);
    std::vector<std::vector<MPolyQ>> mat(k, std::vector<MPolyQ>(k));
    for (unsigned col = 0; col < k; ++col) {
      for (unsigned t = 0; t < k; ++t) {
        if (t + col < k) {
          mat[t + col][col] = parts[t];
        } else {
          mat[t + col - k][col] = parts[t] * X;
        }
      }
    }
    acc = determinant(std::move(mat));
  }
  MPolyQ out;
  for (const auto& [m, c] : acc.terms()) {
    Monomial mm = m;
    for (std::size_t i = 0; i <= var_index(Var::x9); ++i) {
      if (mm[i] % k != 0) throw Error("internal: norm is not invariant under roots of unity");
      mm[i] /= k;
    }
    out.add_term(mm, c);
  }
  return out;
}

IsogenyFactor isogeny_factor_report(const CoverSpec& c, const PBOptions& opts) {
  const PBVerdict v = pb_check(c, opts);
  const auto* notpb = std::get_if<CertifiedNotPB>(&v);
  const auto* ef = notpb ? std::get_if<ExplicitFactor>(&notpb->evidence) : nullptr;
  if (!ef) throw PreconditionFailed("NotApplicable: pb_check found no explicit factor of the pull-back");
  const unsigned d = c.d;
  for (unsigned m = 2; m <= d; ++m) {
    if (d % m != 0) continue;
    const MPolyQ H = torus_norm(ef->factor, d / m);
    const MPolyQ G = gcd(H, pullback(c.f, m));
    const unsigned deg = G.degree(Var::y);
    if (deg > 0 && deg < d) return {m, G, deg};
  }
  return {ef->m, ef->factor, ef->factor.degree(Var::y)};
}

}  // namespace hitforge
