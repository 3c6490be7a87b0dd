#include <random>

#include "doctest.h"
#include "hitforge/finite_field.hpp"
#include "hitforge/mpoly.hpp"
#include "hitforge/upoly.hpp"

using namespace hitforge;

namespace {

MPolyQ P(std::string_view s) { return parse_poly(s); }

UPoly<PrimeField> up(const PrimeField& f, std::vector<std::uint64_t> c) { return upoly::make(f, std::move(c)); }

MPolyQ random_poly(std::mt19937_64& rng, std::vector<Var> vars, unsigned terms, unsigned max_deg) {
  MPolyQ p;
  for (unsigned i = 0; i < terms; ++i) {
    Monomial m{};
    for (Var v : vars) m[var_index(v)] = rng() % (max_deg + 1);
    p.add_term(m, Rat(static_cast<long>(rng() % 7) - 3));
  }
  return p;
}

}  // namespace

TEST_CASE("parse and print") {
  const auto f = P("y^2 - x1 - x2 - 1");
  CHECK(f.size() == 4);
  CHECK(f.degree(Var::y) == 2);
  CHECK(f.str() == "y^2 - x1 - x2 - 1");
  CHECK(P("y").str() == "y");
  const auto g = P("(1/2)*y^2 - t");
  CHECK(g.str() == "1/2*y^2 - t");
  CHECK(P(g.str()) == g);
  CHECK(P("  y ^ 2 − x1 ") == P("y^2-x1"));
  CHECK(P("(x1+1)^2").str() == "x1^2 + 2*x1 + 1");
  CHECK(P("0").is_zero());
  CHECK_THROWS_AS(P("2y"), SyntaxError);
  CHECK_THROWS_AS(P("x1 x2"), SyntaxError);
  CHECK_THROWS_AS(P("y^"), SyntaxError);
  CHECK_THROWS_AS(P("z"), SyntaxError);
  CHECK_THROWS_AS(P(""), SyntaxError);
  CHECK_THROWS_AS(P("(y"), SyntaxError);
  try {
    P("y + * x1");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }

  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(rng, {Var::x1, Var::x2, Var::s, Var::y}, 5, 3);
    CHECK(P(p.str()) == p);
  }
}

TEST_CASE("pullback") {
  CHECK(pullback(P("y^2 - x1"), 2) == P("y^2 - x1^2"));
  CHECK(pullback(P("y^2 - x1 - x2 - 1"), 1) == P("y^2 - x1 - x2 - 1"));
  CHECK(pullback(P("y^3 - x1*x2"), 3) == P("y^3 - x1^3*x2^3"));
  CHECK(pullback(P("y - s*x1"), 2) == P("y - s*x1^2"));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_poly(rng, {Var::x1, Var::x2, Var::y}, 4, 3);
    const unsigned a = 1 + rng() % 3, b = 1 + rng() % 3;
    CHECK(pullback(pullback(f, a), b) == pullback(f, a * b));
  }
}

TEST_CASE("reduce_mod and specialize") {
  const PrimeField f7(7), f5(5);
  auto r = reduce_mod(P("y^2 - 6"), 7);
  REQUIRE(std::holds_alternative<MPolyFp>(r));
  auto s = specialize(f7, std::get<MPolyFp>(r), {});
  CHECK(s.poly == up(f7, {1, 0, 1}));
  CHECK(std::holds_alternative<BadPrime>(reduce_mod(P("(1/3)*y^2 - 1"), 3)));
  CHECK(std::holds_alternative<BadPrime>(reduce_mod(P("3*y^2 - 1"), 3)));
  REQUIRE(std::holds_alternative<MPolyFp>(reduce_mod(P("y^2 - x1"), 5)));

  auto g = std::get<MPolyFp>(reduce_mod(P("y^2 - x1 - x2 - 1"), 7));
  auto sg = specialize(f7, g, {{Var::x1, 2}, {Var::x2, 3}});
  CHECK(sg.poly == up(f7, {1, 0, 1}));
  CHECK(sg.degree_preserved);
  auto h = std::get<MPolyFp>(reduce_mod(P("y^2 - x1"), 5));
  CHECK(specialize(f5, h, {{Var::x1, 0}}).poly == up(f5, {0, 0, 1}));
  auto k = std::get<MPolyFp>(reduce_mod(P("x1*y - 1"), 5));
  auto sk = specialize(f5, k, {{Var::x1, 0}});
  CHECK(sk.poly == up(f5, {4}));
  CHECK_FALSE(sk.degree_preserved);

  // Reducing then specializing commutes with specializing over Q then reducing.
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto fq = random_poly(rng, {Var::x1, Var::x2, Var::y}, 5, 2) * Rat(1, 1 + rng() % 3);
    const std::uint64_t l = std::vector<std::uint64_t>{5, 7, 11, 13}[rng() % 4];
    const Rat a(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3), b(static_cast<long>(rng() % 9) - 4, 1);
    auto red = reduce_mod(fq, l);
    if (!std::holds_alternative<MPolyFp>(red)) continue;
    const auto ra = reduce_rational(a, l), rb = reduce_rational(b, l);
    if (!ra || !rb) continue;
    const PrimeField F(l);
    auto lhs = specialize(F, std::get<MPolyFp>(red), {{Var::x1, *ra}, {Var::x2, *rb}});
    const auto spec_q = fq.primitive_integral().substitute({{Var::x1, a}, {Var::x2, b}});
    std::vector<std::uint64_t> coeffs;
    for (const auto& c : spec_q.coefficients_in(Var::y)) {
      auto rc = reduce_rational(c.is_zero() ? Rat(0) : c.constant_term(), l);
      REQUIRE(rc.has_value());
      coeffs.push_back(*rc);
    }
    CHECK(lhs.poly == upoly::make(F, coeffs));
  }
}

TEST_CASE("factor_univariate and is_irreducible") {
  const PrimeField f7(7), f5(5);
  auto fz = upoly::factor(f7, up(f7, {1, 0, 1}));
  REQUIRE(fz.factors.size() == 1);
  CHECK(fz.factors[0].multiplicity == 1);
  auto fz2 = upoly::factor(f7, up(f7, {6, 0, 1}));
  REQUIRE(fz2.factors.size() == 2);
  CHECK(fz2.factors[0].poly == up(f7, {1, 1}));
  CHECK(fz2.factors[1].poly == up(f7, {6, 1}));
  auto fz3 = upoly::factor(f5, up(f5, {0, 0, 1}));
  REQUIRE(fz3.factors.size() == 1);
  CHECK(fz3.factors[0].multiplicity == 2);
  CHECK(upoly::is_irreducible(f7, up(f7, {1, 0, 1})));
  CHECK_FALSE(upoly::is_irreducible(f5, up(f5, {1, 0, 1})));
  CHECK(upoly::is_irreducible(f5, up(f5, {2, 1})));

  // Product of factors reproduces the input; small degrees match root search.
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t l = primes_between(2, 97)[rng() % 25];
    const PrimeField F(l);
    std::vector<std::uint64_t> c(2 + rng() % 7);
    for (auto& x : c) x = rng() % l;
    c.back() = 1 + rng() % (l - 1);
    const auto a = upoly::make(F, c);
    const auto fa = upoly::factor(F, a, rng());
    REQUIRE(upoly::expand(F, fa) == a);
    for (const auto& fac : fa.factors) CHECK(upoly::is_irreducible(F, fac.poly));
    const bool single = fa.factors.size() == 1 && fa.factors[0].multiplicity == 1;
    CHECK(upoly::is_irreducible(F, a) == single);
    bool root = false;
    for (std::uint64_t x = 0; x < l && !root; ++x) root = upoly::eval(F, a, x) == 0;
    CHECK(upoly::has_root(F, a) == root);
    if (a.degree() >= 2 && a.degree() <= 3) CHECK(upoly::is_irreducible(F, a) == !root);
  }
}

TEST_CASE("ext_field") {
  auto d5 = ext_field(5, 1);
  CHECK(d5.modulus.empty());
  auto d8 = ext_field(2, 3);
  CHECK(d8.modulus == std::vector<std::uint64_t>{1, 1, 0, 1});
  auto d9 = ext_field(3, 2);
  CHECK(d9.modulus == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(descriptor_valid(d9));
  CHECK_FALSE(descriptor_valid(FieldDescriptor{3, 2, {2, 0, 1}}));
  CHECK_THROWS_AS(ext_field(2, 41), BoundExceeded);

  // Every element of F_9 is a square; x^2 - 2 is irreducible over F_25? No:
  // every quadratic over F_5 splits over F_25.
  const ExtField F25(ext_field(5, 2));
  auto two = UPoly<ExtField>{{F25.from_u64(3), F25.zero(), F25.one()}};  // y^2 - 2
  CHECK_FALSE(upoly::is_irreducible(F25, two));
  auto fz = upoly::factor(F25, two);
  CHECK(fz.factors.size() == 2);
  CHECK(upoly::expand(F25, fz) == two);

  const ExtField F8(d8);
  for (std::uint64_t i = 1; i < 8; ++i) {
    const auto a = F8.element(i);
    CHECK(F8.mul(a, F8.inv(a)) == F8.one());
    CHECK(F8.pth_root(F8.mul(a, a)) == a);
  }
}

TEST_CASE("gcd, squarefree part and square test") {
  CHECK(squarefree_part(P("4*x1^2")) == P("x1"));
  CHECK(squarefree_part(P("x1^2 + x2^2 + 1")) == P("x1^2 + x2^2 + 1"));
  CHECK(squarefree_part(P("(x1+1)^2*(x1-1)")) == P("x1^2 - 1"));
  CHECK(gcd(P("x1^2 - x2^2"), P("x1^2 + 2*x1*x2 + x2^2")) == P("x1 + x2"));
  CHECK(gcd(P("y^2 - x1"), P("y - 1")) == P("1"));

  auto sq = square_up_to_constant(P("4*x1^2"));
  CHECK(sq.is_square);
  CHECK(sq.root == P("x1"));
  CHECK(sq.constant == 4);
  CHECK_FALSE(square_up_to_constant(P("4*x1^2 + 4")).is_square);
  CHECK(square_up_to_constant(P("-3*(x1 + x2)^4")).is_square);
  CHECK(discriminant_quadratic(P("y^2 - x1^2"), Var::y) == P("4*x1^2"));

  auto dec = squarefree_decomposition(P("x1*(x1+1)^2*(x2-1)^3"));
  REQUIRE(dec.size() == 3);
  CHECK(dec[0] == std::make_pair(P("x1"), 1u));
  CHECK(dec[1] == std::make_pair(P("x1 + 1"), 2u));
  CHECK(dec[2] == std::make_pair(P("x2 - 1"), 3u));

  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    const auto g = random_poly(rng, {Var::x1, Var::x2}, 3, 2);
    const auto h = random_poly(rng, {Var::x1, Var::x2}, 3, 2);
    if (g.is_zero() || h.is_zero()) continue;
    CHECK(squarefree_part(g * g * h) == squarefree_part(g * h));
  }
}

TEST_CASE("rational roots over Q") {
  CHECK(qpoly::rational_roots(to_qpoly(P("y^2 - 2316"), Var::y)).empty());
  auto r = qpoly::rational_roots(to_qpoly(P("6*y^3 - 11*y^2 + 6*y - 1"), Var::y));
  CHECK(r == std::vector<Rat>{Rat(1, 3), Rat(1, 2), Rat(1)});
  auto r2 = qpoly::rational_roots(to_qpoly(P("y^4 - 2*y^3"), Var::y));
  CHECK(r2 == std::vector<Rat>{Rat(0), Rat(2)});
  auto r3 = qpoly::rational_roots(to_qpoly(P("(2*y+3)^2*(y^2+1)"), Var::y));
  CHECK(r3 == std::vector<Rat>{Rat(-3, 2)});
  CHECK(qpoly::has_rational_root(to_qpoly(P("y^2 - 2304"), Var::y)));
  CHECK_THROWS_AS(to_qpoly(P("y - x1"), Var::y), PreconditionFailed);

  // Oracle: products of known linear factors times a root-free quadratic.
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rat> roots;
    QPoly p{{Rat(1), Rat(0), Rat(1)}};
    for (int k = 0; k < 3; ++k) {
      Rat q(static_cast<long>(rng() % 41) - 20, 1 + rng() % 9);
      q.canonicalize();
      roots.push_back(q);
      p = qpoly::mul(p, QPoly{{-q, Rat(1)}});
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    CHECK(qpoly::rational_roots(p) == roots);
  }
  CHECK(is_perfect_power(Int(2401), 2));
  CHECK_FALSE(is_perfect_power(Int(2316), 2));
  CHECK(is_perfect_power(Int(-27), 3));
  CHECK_FALSE(is_perfect_power(Int(-4), 2));
  CHECK(is_perfect_power(Int(0), 2));
}
