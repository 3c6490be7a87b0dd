#include <random>

#include "doctest.h"
#include "hitforge/torus.hpp"

using namespace hitforge;

namespace {

CoverSpec C(std::string_view s) { return make_cover(parse_poly(s)); }

BasePoint B(std::vector<long> xi) {
  std::vector<Rat> q;
  for (long x : xi) q.emplace_back(x);
  return make_base_point(q);
}

GoodClasses scan(const std::vector<CoverSpec>& covers, const BasePoint& b, std::uint64_t l, FiberMode m) {
  auto r = orbit_scan(covers, b, l, m);
  REQUIRE(std::holds_alternative<GoodClasses>(r));
  return std::get<GoodClasses>(r);
}

// Certificate assembled by hand: fiber y^2 - (2^n + 3^n + 1) mod 7.
ProgressionCertificate hand_certificate() {
  ProgressionCertificate cert;
  cert.mode = FiberMode::NoRationalPoint;
  cert.l = 7;
  cert.M = 6;
  cert.residues = {1, 5};
  cert.fibers = {{FiberRecord{{1, 0, 1}, {2}}}, {FiberRecord{{4, 0, 1}, {2}}}};
  cert.cover_digests = {digest_of(C("y^2 - x1 - x2 - 1"))};
  cert.base_digest = digest_of(B({2, 3}));
  return cert;
}

}  // namespace

TEST_CASE("orbit_scan examples") {
  const std::vector<CoverSpec> anchor{C("y^2 - x1 - x2 - 1")};
  auto g = scan(anchor, B({2, 3}), 7, FiberMode::NoRationalPoint);
  CHECK(g.M == 6);
  CHECK(g.residues == std::vector<std::uint64_t>{0, 1, 5});
  auto d = scan({C("y^2 - x1")}, B({3}), 5, FiberMode::IrreducibleFiber);
  CHECK(d.M == 4);
  CHECK(d.residues == std::vector<std::uint64_t>{1, 3});
  auto e = scan({C("y^2 - x1")}, B({4}), 7, FiberMode::NoRationalPoint);
  CHECK(e.M == 3);
  CHECK(e.residues.empty());
  CHECK(std::holds_alternative<BadPrime>(orbit_scan(anchor, B({2, 3}), 3, FiberMode::NoRationalPoint)));
  CHECK(std::holds_alternative<BadPrime>(orbit_scan(anchor, B({2, 3}), 2, FiberMode::NoRationalPoint)));
  CHECK(std::holds_alternative<BadPrime>(
      orbit_scan(anchor, make_base_point({Rat(2, 11), Rat(3)}), 11, FiberMode::NoRationalPoint)));
  CHECK(std::holds_alternative<BadPrime>(orbit_scan({C("5*y^2 - x1")}, B({2}), 5, FiberMode::NoRationalPoint)));
  CHECK_THROWS_AS(orbit_scan(anchor, B({2}), 7, FiberMode::NoRationalPoint), InputError);
}

TEST_CASE("torsion_target examples") {
  const std::vector<CoverSpec> anchor{C("y^2 - x1 - x2 - 1")};
  auto w = torsion_target(anchor, 3, 7, FiberMode::NoRationalPoint);
  REQUIRE(w.has_value());
  // mu_3 = {1, 2, 4} with generator 2 = 3^2; (1, 2) has fiber y^2 - 4.
  CHECK(w->zeta == std::vector<std::uint64_t>{1, 4});
  CHECK(w->verdicts == std::vector<FiberVerdict>{FiberVerdict::NoRoot});
  auto all = torsion_targets(anchor, 3, 7, FiberMode::NoRationalPoint);
  bool has_22 = false, has_24 = false;
  for (const auto& t : all) {
    has_22 |= t.zeta == std::vector<std::uint64_t>{2, 2};
    has_24 |= t.zeta == std::vector<std::uint64_t>{2, 4};
  }
  CHECK(has_22);
  CHECK_FALSE(has_24);
  CHECK_FALSE(torsion_target({C("y - x1")}, 3, 7, FiberMode::NoRationalPoint).has_value());
  CHECK_FALSE(torsion_target({C("y^2 - x1")}, 5, 11, FiberMode::NoRationalPoint).has_value());
  CHECK_THROWS_AS(torsion_target(anchor, 5, 7, FiberMode::NoRationalPoint), PreconditionFailed);
}

TEST_CASE("transfer examples") {
  TorsionWitness w{3, 7, {2, 2}, std::nullopt, {FiberVerdict::NoRoot}};
  CHECK_FALSE(transfer(w, B({2, 3})).has_value());
  TorsionWitness w1{3, 7, {1, 4}, std::nullopt, {FiberVerdict::NoRoot}};
  CHECK_FALSE(transfer(w1, B({2, 3})).has_value());
  TorsionWitness w2{5, 5, {3}, std::nullopt, {FiberVerdict::NoRoot}};
  auto g = transfer(w2, B({3}));
  REQUIRE(g.has_value());
  CHECK(g->M == 4);
  CHECK(g->residues == std::vector<std::uint64_t>{1});
  TorsionWitness w3{5, 5, {2}, std::nullopt, {FiberVerdict::NoRoot}};
  CHECK_FALSE(transfer(w3, B({4})).has_value());
}

TEST_CASE("find_progression examples") {
  const std::vector<CoverSpec> anchor{C("y^2 - x1 - x2 - 1")};
  ProgressionConfig cfg;
  auto r = find_progression(anchor, B({2, 3}), cfg);
  REQUIRE(std::holds_alternative<ProgressionFound>(r));
  auto cert = std::get<ProgressionFound>(r).cert;
  CHECK(cert.l == 5);
  CHECK(cert.M == 4);
  CHECK(cert.residues == std::vector<std::uint64_t>{0});
  CHECK(accepted(verify_certificate(cert, anchor, B({2, 3}), 40)));

  cfg.min_prime = 7;
  auto r7 = find_progression(anchor, B({2, 3}), cfg);
  REQUIRE(std::holds_alternative<ProgressionFound>(r7));
  const auto& c7 = std::get<ProgressionFound>(r7).cert;
  CHECK(c7.l == 7);
  CHECK(c7.residues == std::vector<std::uint64_t>{0, 1, 5});
  CHECK(c7.fibers[1][0] == FiberRecord{{1, 0, 1}, {2}});

  ProgressionConfig irred;
  irred.mode = FiberMode::IrreducibleFiber;
  auto rd = find_progression({C("y^2 - x1")}, B({3}), irred);
  REQUIRE(std::holds_alternative<ProgressionFound>(rd));
  CHECK(std::get<ProgressionFound>(rd).cert.l == 5);
  CHECK(std::get<ProgressionFound>(rd).cert.residues == std::vector<std::uint64_t>{1, 3});

  ProgressionConfig small;
  small.max_prime = 1000;
  auto ex = find_progression({C("y^2 - x1")}, B({4}), small);
  REQUIRE(std::holds_alternative<Exhausted>(ex));
  CHECK(std::get<Exhausted>(ex).trace.primes_tried == 167);

  CHECK_THROWS_AS(find_progression(anchor, B({2, 4}), cfg), PreconditionFailed);
  CHECK_THROWS_AS(find_progression(anchor, B({-1, 3}), cfg), PreconditionFailed);
}

TEST_CASE("multi-cover progressions intersect per-cover classes") {
  const std::vector<CoverSpec> covers{C("y^2 - x1"), C("y^2 - x1 - 1")};
  auto r = find_progression(covers, B({2}), ProgressionConfig{});
  REQUIRE(std::holds_alternative<ProgressionFound>(r));
  const auto& cert = std::get<ProgressionFound>(r).cert;
  const auto a = scan({covers[0]}, B({2}), cert.l, FiberMode::NoRationalPoint);
  const auto b = scan({covers[1]}, B({2}), cert.l, FiberMode::NoRationalPoint);
  std::vector<std::uint64_t> both;
  std::set_intersection(a.residues.begin(), a.residues.end(), b.residues.begin(), b.residues.end(),
                        std::back_inserter(both));
  CHECK(cert.residues == both);
  CHECK(accepted(verify_certificate(cert, covers, B({2}), 40)));
  // Every smaller prime had an empty intersection.
  for (std::uint64_t l : primes_between(3, cert.l - 1)) {
    auto g = orbit_scan(covers, B({2}), l, FiberMode::NoRationalPoint);
    if (auto* gc = std::get_if<GoodClasses>(&g)) CHECK(gc->residues.empty());
  }
}

TEST_CASE("additive coordinate") {
  const std::vector<CoverSpec> covers{C("y^2 - x1 - s")};
  const auto base = make_base_point({Rat(2)}, Rat(1));
  auto g = scan(covers, base, 5, FiberMode::NoRationalPoint);
  CHECK(g.M == 20);
  for (std::uint64_t n = 0; n < 20; ++n) {
    const std::uint64_t v = (powmod(2, n, 5) + n) % 5;
    const bool good = v == 2 || v == 3;
    CHECK((std::find(g.residues.begin(), g.residues.end(), n) != g.residues.end()) == good);
  }
  auto r = find_progression(covers, base, ProgressionConfig{});
  REQUIRE(std::holds_alternative<ProgressionFound>(r));
  CHECK(accepted(verify_certificate(std::get<ProgressionFound>(r).cert, covers, base, 40)));
  for (std::uint64_t l : {7ull, 13ull, 19ull}) {
    for (const auto& w : torsion_targets(covers, 3, l, FiberMode::NoRationalPoint, 50)) {
      REQUIRE(w.sigma.has_value());
      auto t = transfer(w, base);
      if (!t) continue;
      auto full = scan(covers, base, l, FiberMode::NoRationalPoint);
      for (auto n : t->residues) CHECK(std::binary_search(full.residues.begin(), full.residues.end(), n));
    }
  }
}

TEST_CASE("verify_certificate") {
  const std::vector<CoverSpec> anchor{C("y^2 - x1 - x2 - 1")};
  auto cert = hand_certificate();
  CHECK(accepted(verify_certificate(cert, anchor, B({2, 3}), 13)));
  CHECK(accepted(verify_certificate(cert, anchor, B({2, 3}), 40)));
  // n = 7: 2^7 + 3^7 + 1 = 2316 lies strictly between 48^2 and 49^2.
  CHECK_FALSE(is_perfect_power(Int(2316), 2));

  auto tampered = cert;
  tampered.residues = {1, 2, 5};
  tampered.fibers.insert(tampered.fibers.begin() + 1, {FiberRecord{{0, 0, 1}, {1, 1}}});
  auto rej = verify_certificate(tampered, anchor, B({2, 3}), 13);
  REQUIRE(std::holds_alternative<Reject>(rej));
  CHECK(std::get<Reject>(rej).witness == 2);

  auto wrong_record = cert;
  wrong_record.fibers[0][0].coeffs = {2, 0, 1};
  CHECK_FALSE(accepted(verify_certificate(wrong_record, anchor, B({2, 3}), 13)));

  auto bad = verify_certificate(cert, anchor, make_base_point({Rat(2, 7), Rat(3)}), 13);
  REQUIRE(std::holds_alternative<Reject>(bad));
  CHECK(std::get<Reject>(bad).reason.rfind("BadPrime", 0) == 0);

  auto wrong_m = cert;
  wrong_m.M = 12;
  CHECK_FALSE(accepted(verify_certificate(wrong_m, anchor, B({2, 3}), 13)));

  // Dedekind anchor: y^2 - 3^n irreducible mod 5 for odd n.
  ProgressionCertificate ded;
  ded.mode = FiberMode::IrreducibleFiber;
  ded.l = 5;
  ded.M = 4;
  ded.residues = {1, 3};
  ded.fibers = {{FiberRecord{{2, 0, 1}, {2}}}, {FiberRecord{{3, 0, 1}, {2}}}};
  ded.cover_digests = {"x"};
  CHECK(accepted(verify_certificate(ded, {C("y^2 - x1")}, B({3}), 20)));
}

TEST_CASE("transfer classes are contained in orbit_scan classes") {
  std::mt19937_64 rng(31);
  std::vector<std::vector<CoverSpec>> corpus{{C("y^2 - x1 - x2 - 1")}, {C("y^2 - x1")}, {C("y^2 - x1 - 1")},
                                             {C("y^3 - x1 - x2")}, {C("y^2 - x1 - 1"), C("y^2 - x1 - x2")}};
  const std::vector<const char*> monos{"x1", "x2", "x1*x2", "1", "x1^2", "y"};
  while (corpus.size() < 55) {
    MPolyQ f = parse_poly("y^2");
    for (const char* m : monos) f = f + parse_poly(m) * Rat(static_cast<long>(rng() % 7) - 3);
    try {
      corpus.push_back({make_cover(f)});
    } catch (const InputError&) {
    }
  }
  const BasePoint base = B({2, 3});
  std::size_t checked = 0;
  for (const auto& covers : corpus) {
    for (std::uint64_t l : {7ull, 13ull, 19ull, 31ull, 43ull}) {
      for (FiberMode mode : {FiberMode::NoRationalPoint, FiberMode::IrreducibleFiber}) {
        auto full = orbit_scan(covers, base, l, mode);
        if (!std::holds_alternative<GoodClasses>(full)) continue;
        const auto& oracle = std::get<GoodClasses>(full).residues;
        for (const auto& w : torsion_targets(covers, 3, l, mode, 20)) {
          auto t = transfer(w, base);
          if (!t) continue;
          ++checked;
          CHECK(t->M == std::get<GoodClasses>(full).M);
          for (auto n : t->residues) CHECK(std::binary_search(oracle.begin(), oracle.end(), n));
        }
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("orbit_scan structural properties") {
  std::mt19937_64 rng(41);
  for (std::uint64_t l : primes_between(5, 200)) {
    const auto base = B({2, 3});
    auto one = orbit_scan({C("y^2 - x1 - x2 - 1")}, base, l, FiberMode::NoRationalPoint);
    auto two = orbit_scan({C("y^2 - x1 - x2 - 1"), C("y^3 - x1*x2 - 2")}, base, l, FiberMode::NoRationalPoint);
    if (!std::holds_alternative<GoodClasses>(one) || !std::holds_alternative<GoodClasses>(two)) continue;
    const auto& a = std::get<GoodClasses>(one);
    const auto& b = std::get<GoodClasses>(two);
    CHECK((l * (l - 1)) % a.M == 0);
    for (auto n : b.residues) CHECK(std::binary_search(a.residues.begin(), a.residues.end(), n));
    // Good residues really are good: direct evaluation of the fiber value.
    for (auto n : a.residues) {
      const std::uint64_t v = (powmod(2, n, l) + powmod(3, n, l) + 1) % l;
      CHECK(powmod(v, (l - 1) / 2, l) == l - 1);
    }
  }
}
