#include <random>

#include "doctest.h"
#include "hitforge/pb_gate.hpp"

using namespace hitforge;

namespace {

MPolyQ P(std::string_view s) { return parse_poly(s); }

bool same_up_to_sign(const MPolyQ& a, const MPolyQ& b) { return a == b || a == -b; }

}  // namespace

TEST_CASE("make_cover validation") {
  auto c = make_cover(P("y^2 - x1 - x2 - 1"));
  CHECK(c.r == 2);
  CHECK(c.d == 2);
  CHECK_FALSE(c.has_additive);
  CHECK(make_cover(P("y^2 - x1 - s")).has_additive);
  CHECK(make_cover(P("2*y^2 - 4*x1")).f == P("y^2 - 2*x1"));
  CHECK_THROWS_AS(make_cover(P("x1 + 1")), InputError);
  CHECK_THROWS_AS(make_cover(P("(y - x1)^2")), InputError);
  CHECK_THROWS_AS(make_cover(P("y - t")), InputError);
}

TEST_CASE("abs_irreducible") {
  auto w = abs_irreducible(P("y^2 - x1 - x2 - 1"));
  REQUIRE(std::holds_alternative<AbsIrredWitness>(w));
  const auto& aw = std::get<AbsIrredWitness>(w);
  REQUIRE(std::holds_alternative<SpecializationWitness>(aw));
  CHECK(std::get<SpecializationWitness>(aw).l <= 50);
  CHECK(std::get<SpecializationWitness>(aw).L == 2);
  CHECK_FALSE(check_abs_irred_witness(P("y^2 - x1 - x2 - 1"), aw));
  // The same witness does not certify a different polynomial.
  CHECK(check_abs_irred_witness(P("y^2 - x1 - x2 - 2"), aw));

  CHECK(std::holds_alternative<Unknown>(abs_irreducible(P("y^2 - x1^2"))));
  CHECK(std::holds_alternative<Unknown>(abs_irreducible(P("x1*y^2 - x1^2"))));
  auto lin = abs_irreducible(P("y - x1"));
  REQUIRE(std::holds_alternative<AbsIrredWitness>(lin));
  CHECK(std::holds_alternative<LinearWitness>(std::get<AbsIrredWitness>(lin)));

  auto cubic = abs_irreducible(P("y^3 - x1^3 - 1"));
  REQUIRE(std::holds_alternative<AbsIrredWitness>(cubic));
  const auto& sw = std::get<SpecializationWitness>(std::get<AbsIrredWitness>(cubic));
  CHECK(sw.L == 6);
  CHECK_FALSE(check_abs_irred_witness(P("y^3 - x1^3 - 1"), std::get<AbsIrredWitness>(cubic)));
  CHECK(std::holds_alternative<Unknown>(abs_irreducible(P("y^3 - x1^3"))));
}

TEST_CASE("pb_check verdicts") {
  auto v1 = pb_check(make_cover(P("y^2 - x1")));
  REQUIRE(std::holds_alternative<CertifiedNotPB>(v1));
  const auto& ev = std::get<CertifiedNotPB>(v1).evidence;
  REQUIRE(std::holds_alternative<ExplicitFactor>(ev));
  CHECK(std::get<ExplicitFactor>(ev).m == 2);
  CHECK(same_up_to_sign(std::get<ExplicitFactor>(ev).factor, P("y - x1")));
  CHECK_FALSE(check_pb_verdict(make_cover(P("y^2 - x1")), v1));

  for (const char* text : {"y^2 - x1 - 1", "y^2 - x1 - x2 - 1"}) {
    const auto c = make_cover(P(text));
    auto v = pb_check(c);
    REQUIRE(std::holds_alternative<CertifiedPB>(v));
    CHECK_FALSE(check_pb_verdict(c, v));
  }

  // -x1^2 pulled back: discriminant -4*x1^2 is a square only over Q(i).
  auto vi = pb_check(make_cover(P("y^2 + x1")));
  REQUIRE(std::holds_alternative<CertifiedNotPB>(vi));
  CHECK_FALSE(check_pb_verdict(make_cover(P("y^2 + x1")), vi));

  CHECK_THROWS_AS(pb_check(make_cover(P("y^2 - x1^2 - 2*x1 - 1 + 0*x2 + x2 - x2"))), PreconditionFailed);

  auto v3 = pb_check(make_cover(P("y^3 - x1")));
  REQUIRE(std::holds_alternative<CertifiedNotPB>(v3));
  CHECK_FALSE(check_pb_verdict(make_cover(P("y^3 - x1")), v3));
  auto v4 = pb_check(make_cover(P("y^3 - x1 - 1")));
  REQUIRE(std::holds_alternative<CertifiedPB>(v4));
  CHECK_FALSE(check_pb_verdict(make_cover(P("y^3 - x1 - 1")), v4));
}

TEST_CASE("isogeny_factor_report") {
  auto r1 = isogeny_factor_report(make_cover(P("y^2 - x1")));
  CHECK(r1.m == 2);
  CHECK(same_up_to_sign(r1.factor, P("y - x1")));
  CHECK(r1.residual_degree == 1);
  CHECK_THROWS_AS(isogeny_factor_report(make_cover(P("y^2 - x1 - 1"))), PreconditionFailed);
  auto r2 = isogeny_factor_report(make_cover(P("y^4 - x1")));
  CHECK(r2.m == 2);
  CHECK(same_up_to_sign(r2.factor, P("y^2 - x1")));
  CHECK(r2.residual_degree == 2);
  CHECK(torus_norm(P("y - x1"), 2) == P("y^2 - x1"));
  // Nine conjugates (zeta1*zeta2 runs over mu_3 three times each).
  CHECK(torus_norm(P("y - x1*x2"), 3) == P("(y^3 - x1*x2)^3"));
}

TEST_CASE("quadratic covers: gate is complete and evidence checks") {
  std::mt19937_64 rng(21);
  int decided = 0;
  for (int iter = 0; iter < 100; ++iter) {
    MPolyQ f = P("y^2");
    const std::vector<const char*> monos{"x1", "x2", "x1^2", "x1*x2", "1", "x2^2", "y", "x1*y"};
    for (const char* m : monos) f = f + P(m) * Rat(static_cast<long>(rng() % 5) - 2);
    if (f.degree(Var::y) != 2) continue;
    CoverSpec c;
    try {
      c = make_cover(f);
    } catch (const InputError&) {
      continue;
    }
    PBVerdict v;
    try {
      v = pb_check(c);
    } catch (const PreconditionFailed&) {
      continue;
    }
    ++decided;
    CHECK_FALSE(std::holds_alternative<Unknown>(v));
    CHECK_FALSE(check_pb_verdict(c, v));
    if (auto* np = std::get_if<CertifiedNotPB>(&v)) {
      if (auto* ef = std::get_if<ExplicitFactor>(&np->evidence)) {
        auto q = divide_exact(pullback(c.f, ef->m), ef->factor);
        REQUIRE(q.has_value());
        CHECK(*q * ef->factor == pullback(c.f, ef->m));
      }
    } else {
      for (unsigned m : {2u, 3u}) {
        auto w = abs_irreducible(pullback(c.f, m));
        CHECK(std::holds_alternative<AbsIrredWitness>(w));
      }
    }
  }
  CHECK(decided > 50);
}
