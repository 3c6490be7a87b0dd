#include "hitforge/mpoly.hpp"

#include <algorithm>

namespace hitforge {
namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8",
                                                              "x9", "s",  "t",  "T",  "X",  "Y",  "y"};

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] - b[i];
  return r;
}

// Leading variable of the pair: the most significant one present.
std::optional<Var> main_variable(const MPolyQ& a, const MPolyQ& b) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const Var v = static_cast<Var>(i);
    if (a.involves(v) || b.involves(v)) return v;
  }
  return std::nullopt;
}

MPolyQ exact(const MPolyQ& a, const MPolyQ& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal: inexact division in gcd");
  return *q;
}

MPolyQ one() { return MPolyQ::constant(1); }

MPolyQ primitive_in(const MPolyQ& a, Var v) {
  return exact(a, content_in(a, v));
}

MPolyQ pseudo_remainder(const MPolyQ& a, const MPolyQ& b, Var v) {
  auto ac = a.coefficients_in(v);
  const auto bc = b.coefficients_in(v);
  const std::size_t db = bc.size() - 1;
  const MPolyQ& lb = bc.back();
  while (!ac.empty() && ac.size() - 1 >= db) {
    const std::size_t da = ac.size() - 1;
    const MPolyQ la = ac.back();
    for (auto& coef : ac) coef = coef * lb;
    for (std::size_t i = 0; i <= db; ++i) ac[i + da - db] = ac[i + da - db] - la * bc[i];
    while (!ac.empty() && ac.back().is_zero()) ac.pop_back();
  }
  return MPolyQ::from_coefficients(v, ac);
}

MPolyQ prs_gcd(MPolyQ a, MPolyQ b, Var v) {
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  for (;;) {
    MPolyQ r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return primitive_in(b, v).primitive_integral();
    if (r.degree(v) == 0) return one();
    a = std::move(b);
    b = primitive_in(r, v).primitive_integral();
  }
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[var_index(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

std::uint64_t total_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MPolyQ MPolyQ::constant(const Rat& c) {
  MPolyQ p;
  p.add_term(Monomial{}, c);
  return p;
}

MPolyQ MPolyQ::variable(Var v) {
  Monomial m{};
  m[var_index(v)] = 1;
  return term(1, m);
}

MPolyQ MPolyQ::term(const Rat& c, const Monomial& m) {
  MPolyQ p;
  p.add_term(m, c);
  return p;
}

bool MPolyQ::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && ::hitforge::total_degree(terms_.begin()->first) == 0);
}

Rat MPolyQ::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rat(0) : it->second;
}

unsigned MPolyQ::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var_index(v)]);
  return d;
}

std::uint64_t MPolyQ::total_degree() const {
  return terms_.empty() ? 0 : ::hitforge::total_degree(terms_.begin()->first);
}

std::vector<Var> MPolyQ::variables() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (involves(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
  }
  return out;
}

void MPolyQ::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPolyQ MPolyQ::operator-() const {
  MPolyQ r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPolyQ MPolyQ::operator+(const MPolyQ& o) const {
  MPolyQ r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MPolyQ MPolyQ::operator-(const MPolyQ& o) const {
  MPolyQ r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MPolyQ MPolyQ::operator*(const MPolyQ& o) const {
  MPolyQ r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  }
  return r;
}

MPolyQ MPolyQ::operator*(const Rat& k) const {
  if (k == 0) return {};
  MPolyQ r = *this;
  for (auto& [m, c] : r.terms_) c *= k;
  return r;
}

MPolyQ MPolyQ::pow(unsigned e) const {
  MPolyQ result = constant(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::vector<MPolyQ> MPolyQ::coefficients_in(Var v) const {
  std::vector<MPolyQ> out(degree(v) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[var_index(v)] = 0;
    out[m[var_index(v)]].add_term(rest, c);
  }
  return out;
}

MPolyQ MPolyQ::from_coefficients(Var v, const std::vector<MPolyQ>& coeffs) {
  MPolyQ r;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [m, c] : coeffs[k].terms_) {
      Monomial mm = m;
      mm[var_index(v)] += static_cast<std::uint32_t>(k);
      r.add_term(mm, c);
    }
  }
  return r;
}

MPolyQ MPolyQ::derivative(Var v) const {
  MPolyQ r;
  for (const auto& [m, c] : terms_) {
    const auto e = m[var_index(v)];
    if (e == 0) continue;
    Monomial mm = m;
    mm[var_index(v)] = e - 1;
    r.add_term(mm, c * e);
  }
  return r;
}

MPolyQ MPolyQ::substitute(Var v, const MPolyQ& value) const {
  const auto coeffs = coefficients_in(v);
  MPolyQ acc;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * value + coeffs[k];
  return acc;
}

MPolyQ MPolyQ::substitute(const std::map<Var, Rat>& values) const {
  MPolyQ r;
  for (const auto& [m, c] : terms_) {
    Rat coef = c;
    Monomial rest = m;
    for (const auto& [v, x] : values) {
      const auto e = m[var_index(v)];
      if (e == 0) continue;
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), x.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), x.get_den_mpz_t(), e);
      p.canonicalize();
      coef *= p;
      rest[var_index(v)] = 0;
    }
    r.add_term(rest, coef);
  }
  return r;
}

MPolyQ MPolyQ::primitive_integral() const {
  if (terms_.empty()) return {};
  Int lcm_den = 1, gcd_num = 0;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rat k(lcm_den, gcd_num);
  k.canonicalize();
  if (leading_coefficient() < 0) k = -k;
  return *this * k;
}

std::string MPolyQ::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rat mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

MPolyQ pullback(const MPolyQ& f, unsigned m) {
  if (m < 1) throw InputError("pullback: m must be >= 1");
  MPolyQ r;
  for (const auto& [mono, c] : f.terms()) {
    Monomial mm = mono;
    for (std::size_t i = 0; i <= var_index(Var::x9); ++i) mm[i] *= m;
    r.add_term(mm, c);
  }
  return r;
}

std::optional<MPolyQ> divide_exact(const MPolyQ& a, const MPolyQ& b) {
  if (b.is_zero()) throw Error("divide_exact: division by zero");
  MPolyQ rem = a, quot;
  const Monomial& lb = b.leading_monomial();
  const Rat& cb = b.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial lr = rem.leading_monomial();
    if (!mono_divides(lb, lr)) return std::nullopt;
    const MPolyQ t = MPolyQ::term(rem.leading_coefficient() / cb, mono_div(lr, lb));
    quot = quot + t;
    rem = rem - t * b;
  }
  return quot;
}

MPolyQ content_in(const MPolyQ& f, Var v) {
  MPolyQ g;
  for (const auto& c : f.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return one();
  }
  return g.is_zero() ? one() : g;
}

MPolyQ gcd(const MPolyQ& a, const MPolyQ& b) {
  if (a.is_zero()) return b.is_zero() ? MPolyQ{} : b.primitive_integral();
  if (b.is_zero()) return a.primitive_integral();
  if (a.is_constant() || b.is_constant()) return one();
  const Var v = *main_variable(a, b);
  if (!a.involves(v)) return gcd(a, content_in(b, v));
  if (!b.involves(v)) return gcd(content_in(a, v), b);
  const MPolyQ ca = content_in(a, v), cb = content_in(b, v);
  const MPolyQ c = gcd(ca, cb);
  const MPolyQ g = prs_gcd(exact(a, ca), exact(b, cb), v);
  return (c * g).primitive_integral();
}

MPolyQ squarefree_part(const MPolyQ& g) {
  if (g.is_zero()) throw PreconditionFailed("squarefree_part: zero polynomial");
  if (g.is_constant()) return one();
  MPolyQ common = g;
  for (Var v : g.variables()) {
    common = gcd(common, g.derivative(v));
    if (common.is_constant()) break;
  }
  return exact(g, common).primitive_integral();
}

std::vector<std::pair<MPolyQ, unsigned>> squarefree_decomposition(const MPolyQ& g) {
  std::vector<std::pair<MPolyQ, unsigned>> parts;
  MPolyQ a = g.primitive_integral();
  unsigned j = 1;
  while (!a.is_constant()) {
    const MPolyQ s = squarefree_part(a);
    const MPolyQ next = exact(a, s).primitive_integral();
    const MPolyQ s_next = next.is_constant() ? one() : squarefree_part(next);
    const MPolyQ exactly_j = exact(s, s_next).primitive_integral();
    if (!exactly_j.is_constant()) parts.emplace_back(exactly_j, j);
    a = next;
    ++j;
  }
  return parts;
}

SquareTest square_up_to_constant(const MPolyQ& g) {
  if (g.is_zero()) return {true, MPolyQ{}, Rat(0)};
  SquareTest out;
  MPolyQ root = one();
  for (const auto& [part, j] : squarefree_decomposition(g)) {
    if (j % 2 == 1) return out;
    root = root * part.pow(j / 2);
  }
  const auto c = divide_exact(g, root * root);
  if (!c || !c->is_constant()) throw Error("internal: square decomposition inconsistent");
  out.is_square = true;
  out.root = root;
  out.constant = c->constant_term();
  return out;
}

MPolyQ discriminant_quadratic(const MPolyQ& f, Var v) {
  const auto c = f.coefficients_in(v);
  if (c.size() != 3) throw PreconditionFailed("discriminant_quadratic: degree must be 2");
  return c[1] * c[1] - c[2] * c[0] * Rat(4);
}

unsigned MPolyFp::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms) d = std::max(d, m[var_index(v)]);
  return d;
}

std::variant<MPolyFp, BadPrime> reduce_mod(const MPolyQ& f, std::uint64_t l, Var main) {
  for (const auto& [m, c] : f.terms()) {
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), l)) return BadPrime{"l divides a coefficient denominator"};
  }
  const MPolyQ p = f.primitive_integral();
  MPolyFp out;
  out.l = l;
  out.main = main;
  for (const auto& [m, c] : p.terms()) {
    const std::uint64_t r = mod_of(c.get_num(), l);
    if (r != 0) out.terms.emplace(m, r);
  }
  if (out.degree(main) != p.degree(main) || (p.degree(main) == 0 && out.terms.empty() && !p.is_zero())) {
    return BadPrime{std::string("leading coefficient in ") + std::string(var_name(main)) + " vanishes mod l"};
  }
  return out;
}

bool is_perfect_power(const Int& v, unsigned d) {
  if (d == 0) throw PreconditionFailed("is_perfect_power: d must be >= 1");
  if (v < 0 && d % 2 == 0) return false;
  Int mag = abs(v), root;
  return mpz_root(root.get_mpz_t(), mag.get_mpz_t(), d) != 0;
}

}  // namespace hitforge
