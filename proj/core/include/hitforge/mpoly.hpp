#pragma once

// Sparse multivariate polynomials over Q on a fixed variable universe
// x1..x9, s, t, T, X, Y, y.  Terms are kept in graded-lexicographic order
// with y least significant, so fibers read off as y-polynomials.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hitforge/arith.hpp"
#include "hitforge/errors.hpp"
#include "hitforge/upoly.hpp"

namespace hitforge {

enum class Var : std::uint8_t { x1, x2, x3, x4, x5, x6, x7, x8, x9, s, t, T, X, Y, y };
inline constexpr std::size_t kNumVars = 15;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);
inline bool is_torus_var(Var v) { return static_cast<std::uint8_t>(v) <= static_cast<std::uint8_t>(Var::x9); }
inline Var torus_var(std::size_t i) { return static_cast<Var>(i); }  // 0 -> x1
inline std::size_t var_index(Var v) { return static_cast<std::size_t>(v); }

using Monomial = std::array<std::uint32_t, kNumVars>;

/// Descending graded-lex: higher total degree first, ties broken
/// lexicographically with x1 most significant and y least.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

std::uint64_t total_degree(const Monomial& m);

class MPolyQ {
 public:
  using Terms = std::map<Monomial, Rat, GrlexGreater>;

  MPolyQ() = default;
  static MPolyQ constant(const Rat& c);
  static MPolyQ variable(Var v);
  static MPolyQ term(const Rat& c, const Monomial& m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  std::size_t size() const { return terms_.size(); }

  unsigned degree(Var v) const;
  std::uint64_t total_degree() const;
  bool involves(Var v) const { return degree(v) > 0; }
  std::vector<Var> variables() const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rat& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const Rat& c);

  MPolyQ operator-() const;
  MPolyQ operator+(const MPolyQ& o) const;
  MPolyQ operator-(const MPolyQ& o) const;
  MPolyQ operator*(const MPolyQ& o) const;
  MPolyQ operator*(const Rat& k) const;
  MPolyQ pow(unsigned e) const;
  bool operator==(const MPolyQ& o) const { return terms_ == o.terms_; }

  /// coefficients_in(v)[k] is the coefficient of v^k.
  std::vector<MPolyQ> coefficients_in(Var v) const;
  static MPolyQ from_coefficients(Var v, const std::vector<MPolyQ>& coeffs);

  MPolyQ derivative(Var v) const;
  MPolyQ substitute(Var v, const MPolyQ& value) const;
  MPolyQ substitute(const std::map<Var, Rat>& values) const;

  /// Content 1, integer coefficients, positive leading coefficient.
  MPolyQ primitive_integral() const;

  /// Canonical text, e.g. "y^2 - x1 - x2 - 1" or "1/2*y^2 - t".
  std::string str() const;

 private:
  Terms terms_;
};

MPolyQ parse_poly(std::string_view text);

/// x_i -> x_i^m on the torus variables x1..x9 only.
MPolyQ pullback(const MPolyQ& f, unsigned m);

/// a / b when b divides a exactly, else nullopt.
std::optional<MPolyQ> divide_exact(const MPolyQ& a, const MPolyQ& b);

/// Greatest common divisor in primitive-integral form (1 for coprime inputs).
MPolyQ gcd(const MPolyQ& a, const MPolyQ& b);

/// gcd of the coefficients of f viewed as a polynomial in v.
MPolyQ content_in(const MPolyQ& f, Var v);

/// Product of the distinct irreducible factors, primitive-integral.
MPolyQ squarefree_part(const MPolyQ& g);

/// parts[i] = (P, j): P is the product of the irreducible factors of
/// multiplicity exactly j.  Constant parts are omitted.
std::vector<std::pair<MPolyQ, unsigned>> squarefree_decomposition(const MPolyQ& g);

struct SquareTest {
  bool is_square = false;
  MPolyQ root;   // when is_square: g = constant * root^2
  Rat constant;
};

/// Decides whether g is a square in Qbar[vars], i.e. c * h^2 with c in Q.
SquareTest square_up_to_constant(const MPolyQ& g);

/// b^2 - 4ac for f quadratic in v.
MPolyQ discriminant_quadratic(const MPolyQ& f, Var v);

// ---- reduction to F_l ------------------------------------------------------

struct BadPrime {
  std::string reason;
};

struct MPolyFp {
  std::uint64_t l = 2;
  Var main = Var::y;
  std::map<Monomial, std::uint64_t, GrlexGreater> terms;

  unsigned degree(Var v) const;
};

/// Coefficientwise reduction of the primitive-integral form.  BadPrime when
/// l divides a coefficient denominator of f or the leading coefficient in
/// `main` vanishes mod l.
std::variant<MPolyFp, BadPrime> reduce_mod(const MPolyQ& f, std::uint64_t l, Var main = Var::y);

template <class F>
struct Specialization {
  UPoly<F> poly;
  bool degree_preserved = false;
};

/// Substitutes field values for every variable other than f.main.
template <class F>
Specialization<F> specialize(const F& field, const MPolyFp& f, const std::map<Var, typename F::Elem>& point) {
  const unsigned d = f.degree(f.main);
  std::vector<typename F::Elem> coeffs(d + 1, field.zero());
  for (const auto& [m, c] : f.terms) {
    auto value = field.from_u64(c);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m[i] == 0 || static_cast<Var>(i) == f.main) continue;
      auto it = point.find(static_cast<Var>(i));
      if (it == point.end()) throw InputError(std::string("specialize: no value for ") + std::string(var_name(static_cast<Var>(i))));
      value = field.mul(value, field.pow(it->second, std::uint64_t{m[i]}));
    }
    auto& slot = coeffs[m[var_index(f.main)]];
    slot = field.add(slot, value);
  }
  Specialization<F> out{upoly::make(field, std::move(coeffs)), false};
  out.degree_preserved = out.poly.degree() == static_cast<int>(d);
  return out;
}

// ---- dense univariate over Q ------------------------------------------------

struct QPoly {
  std::vector<Rat> c;  // low-to-high, trimmed

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool operator==(const QPoly&) const = default;
};

/// f must involve no variable other than v.
QPoly to_qpoly(const MPolyQ& f, Var v);

namespace qpoly {
void trim(QPoly& a);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);  // monic
QPoly derivative(const QPoly& a);
Rat eval(const QPoly& a, const Rat& x);
/// Integer coefficients with content 1 and positive leading coefficient.
std::vector<Int> primitive_integer(const QPoly& a);
/// All distinct rational roots, ascending.
std::vector<Rat> rational_roots(const QPoly& a);
bool has_rational_root(const QPoly& a);
}  // namespace qpoly

/// True iff v = w^d for an integer w.
bool is_perfect_power(const Int& v, unsigned d);

}  // namespace hitforge
