#include <random>

#include "doctest.h"
#include "hitforge/kron.hpp"

using namespace hitforge;

namespace {

MPolyQ P(std::string_view s) { return parse_poly(s); }

// Squarefree test for a univariate in t by an exact gcd with the derivative.
bool squarefree_in_t(const MPolyQ& h) {
  const QPoly q = to_qpoly(h, Var::t);
  return qpoly::gcd(q, qpoly::derivative(q)).degree() == 0;
}

MPolyQ random_poly_t(std::mt19937_64& rng, unsigned deg, int span) {
  MPolyQ out;
  for (unsigned e = 0; e <= deg; ++e) {
    out = out + MPolyQ::variable(Var::t).pow(e) * Rat(static_cast<long>(rng() % (2 * span + 1)) - span);
  }
  return out;
}

}  // namespace

TEST_CASE("kron_substitute examples") {
  for (unsigned m : {2u, 5u, 17u}) {
    const auto s = kron_substitute(P("y^2 - x1 - x2 - 1"), {1, static_cast<std::int64_t>(m)});
    CHECK(s.g == P("y^2 - t - 1") - MPolyQ::variable(Var::t).pow(m));
    CHECK_FALSE(s.collapsed);
  }
  CHECK(kron_substitute(P("y^2 - x1"), {1}).g == P("y^2 - t"));
  const auto c = kron_substitute(P("y - x1*x2"), {1, -1});
  CHECK(c.g == P("y - 1"));
  CHECK(c.collapsed);
  const auto n = kron_substitute(P("y - x1"), {-1});
  CHECK(n.g == P("t*y - 1"));
  CHECK(n.shift == 1);
  CHECK(kron_substitute(P("y^2 - x1 - x2"), {1, 1}).collapsed);
  CHECK_THROWS_AS(kron_substitute(P("y - x2"), {1}), PreconditionFailed);
  CHECK_THROWS_AS(kron_substitute(P("y - x1"), {0}), PreconditionFailed);
  CHECK(kronecker_exponents(3, 4) == std::vector<std::int64_t>{1, 3, 9, 27});
}

TEST_CASE("kron_substitute is multiplicative in the exponents") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    MPolyQ f = P("y^2");
    for (const char* mono : {"x1", "x2", "x1*x2", "x1^2*y", "x2*y", "1"}) {
      f = f + P(mono) * Rat(static_cast<long>(rng() % 7) - 3);
    }
    if (!f.involves(Var::x1) || !f.involves(Var::x2)) continue;
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 6), k = 1 + static_cast<std::int64_t>(rng() % 4);
    const auto base = kron_substitute(f, {1, m});
    const auto scaled = kron_substitute(f, {k, m * k});
    CHECK(base.g.substitute(Var::t, MPolyQ::variable(Var::t).pow(static_cast<unsigned>(k))) == scaled.g);
  }
}

TEST_CASE("bivariate certificates") {
  // Points come from F_{l^2}, where t0 + 1 can be a non-square.
  const auto quad = bivariate_abs_irreducible(P("y^2 - t - 1"));
  REQUIRE(std::holds_alternative<AbsIrredWitness>(quad));
  CHECK_FALSE(check_abs_irred_witness(P("y^2 - t - 1"), std::get<AbsIrredWitness>(quad)).has_value());
  CHECK(std::holds_alternative<AbsIrredWitness>(certify_abs_irreducible(P("y^2 - t - 1"))));
  CHECK(std::holds_alternative<Unknown>(bivariate_abs_irreducible(P("y^2 - t^2"))));
  CHECK(std::holds_alternative<Unknown>(certify_abs_irreducible(P("y^2 - t^2"))));
  const auto w = bivariate_abs_irreducible(P("y^3 - t^2 - t"));
  REQUIRE(std::holds_alternative<AbsIrredWitness>(w));
  const auto& sw = std::get<SpecializationWitness>(std::get<AbsIrredWitness>(w));
  CHECK(sw.L == 6);
  CHECK(sw.l >= 5);
  CHECK_FALSE(check_abs_irred_witness(P("y^3 - t^2 - t"), std::get<AbsIrredWitness>(w)).has_value());
  CHECK_THROWS_AS(bivariate_abs_irreducible(P("y^2 - x1")), PreconditionFailed);
}

TEST_CASE("kron_scan anchors") {
  const auto report = kron_scan(make_cover(P("y^2 - x1 - x2 - 1")), 2, 30);
  REQUIRE(report.verdicts.size() == 29);
  for (const auto& v : report.verdicts) {
    const MPolyQ inner = MPolyQ::variable(Var::t).pow(v.m) + P("t + 1");
    CHECK(squarefree_in_t(inner));
    CHECK(std::holds_alternative<AbsIrredWitness>(v.verdict));
  }
  CHECK_FALSE(check_kron_report(report).has_value());

  const auto r1 = kron_scan(make_cover(P("y^2 - x1 - 1")), 2, 30);
  for (const auto& v : r1.verdicts) {
    CHECK(squarefree_in_t(MPolyQ::variable(Var::t).pow(v.m) + P("1")));
    CHECK(std::holds_alternative<AbsIrredWitness>(v.verdict));
  }
  CHECK_THROWS_AS(kron_scan(make_cover(P("y^2 - x1")), 2, 10), PreconditionFailed);

  auto tampered = report;
  tampered.verdicts[3].substituted = P("y^2 - t - 1");
  CHECK(check_kron_report(tampered).has_value());

  const auto cubic = kron_scan(make_cover(P("y^3 - x1 - x2")), 2, 6);
  for (const auto& v : cubic.verdicts) CHECK(std::holds_alternative<AbsIrredWitness>(v.verdict));
  CHECK_FALSE(check_kron_report(cubic).has_value());
}

TEST_CASE("d = 2 discriminant verdict agrees with character counts mod l") {
  // A non-square discriminant of degree <= 12 takes both square classes on
  // F_l for l > 1000 by the Weil bound; c * h^2 takes only one.
  std::mt19937_64 rng(13);
  int squares = 0, others = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const MPolyQ b = random_poly_t(rng, 1 + rng() % 5, 3);
    MPolyQ c;
    if (iter % 2 == 0) {
      const MPolyQ h = random_poly_t(rng, 1 + rng() % 5, 3);
      c = (b * b - h * h * Rat(1 + 2 * static_cast<long>(rng() % 2))) * Rat(1, 4);
    } else {
      c = random_poly_t(rng, 1 + rng() % 6, 4);
    }
    const MPolyQ g = P("y^2") + b * MPolyQ::variable(Var::y) + c;
    const bool certified = std::holds_alternative<AbsIrredWitness>(certify_abs_irreducible(g));
    const MPolyQ disc = discriminant_quadratic(g, Var::y);
    if (disc.is_constant()) continue;
    bool both_classes = true;
    for (std::uint64_t l : {1009ull, 1013ull, 1019ull}) {
      bool seen_sq = false, seen_non = false;
      for (std::uint64_t t0 = 0; t0 < l; ++t0) {
        const auto v = reduce_rational(disc.substitute({{Var::t, Rat(static_cast<unsigned long>(t0))}}).constant_term(), l);
        if (!v || *v == 0) continue;
        (powmod(*v, (l - 1) / 2, l) == 1 ? seen_sq : seen_non) = true;
      }
      both_classes = both_classes && seen_sq && seen_non;
    }
    CHECK(certified == both_classes);
    (certified ? others : squares) += 1;
  }
  CHECK(squares > 10);
  CHECK(others > 10);
}

TEST_CASE("subgroup_scan") {
  const MPolyQ f = P("y^2 - x1 - x2 - 1");
  const auto scan = subgroup_scan(f, {{1, 1}, {1, 0}, {1, 2}}, {2});
  CHECK(scan.l == 1009);
  REQUIRE(scan.flagged.size() == 2);
  CHECK(scan.flagged[0].a == std::vector<std::int64_t>{1, 1});
  CHECK(scan.flagged[0].reason == "factorization");
  CHECK(scan.flagged[0].order == 2);
  CHECK((scan.flagged[0].theta[0] + scan.flagged[0].theta[1]) % scan.l == 0);
  CHECK(scan.flagged[1].reason == "degenerate");

  const auto wide = subgroup_scan(f, {{1, 2}, {2, 3}}, {2, 3, 4, 5, 6});
  CHECK(wide.l == 1021);
  CHECK(wide.skipped_orders.empty());
  CHECK(wide.flagged.empty());

  const auto skipped = subgroup_scan(f, {{1, 2}}, {5}, 1009);
  CHECK(skipped.skipped_orders == std::vector<unsigned>{5});

  KronReport report = kron_scan(make_cover(f), 2, 4);
  report.subgroups = scan;
  CHECK_FALSE(check_kron_report(report).has_value());
  report.subgroups->flagged[0].theta = {1, 1};
  CHECK(check_kron_report(report).has_value());

  CHECK(default_subgroup_prime({2, 3, 4, 6}) == 1009);
}
