#include <set>

#include "doctest.h"
#include "hitforge/errors.hpp"
#include "hitforge/recurrence.hpp"

using namespace hitforge;

namespace {

RecurrenceSpec gaussian() { return rec_from_quadratic(4, 5, 2, 4, 1, 2); }
RecurrenceSpec lucas(unsigned d = 2) { return rec_from_quadratic(1, -1, 2, 1, 0, d); }
RecurrenceSpec two_pow() { return make_recurrence({2}, {1}, 0, 2); }

// 2 Re((2+i)^n) by Gaussian-integer powering.
Int gaussian_trace(unsigned n) {
  Int re = 1, im = 0;
  for (unsigned i = 0; i < n; ++i) {
    Int nre = 2 * re - im, nim = re + 2 * im;
    re = nre;
    im = nim;
  }
  return 2 * re;
}

// d-th powers of F_l^* by enumeration.
std::set<std::uint64_t> dth_powers(std::uint64_t d, std::uint64_t l) {
  std::set<std::uint64_t> s;
  for (std::uint64_t x = 1; x < l; ++x) s.insert(powmod(x, d, l));
  return s;
}

}  // namespace

TEST_CASE("recurrence construction") {
  const auto g = gaussian();
  CHECK(g.coeffs == std::vector<Int>{4, -5});
  CHECK(g.initial == std::vector<Int>{2, 4});
  CHECK(g.shift == 1);
  CHECK(canonical_text(g) == "coeffs=4,-5;init=2,4;shift=1;power=2");
  CHECK_THROWS_AS(make_recurrence({}, {}, 0, 2), InputError);
  CHECK_THROWS_AS(make_recurrence({1, 0}, {1, 1}, 0, 2), InputError);
  CHECK_THROWS_AS(make_recurrence({1}, {1, 1}, 0, 2), InputError);
  CHECK_THROWS_AS(make_recurrence({1}, {1}, 0, 1), InputError);
}

TEST_CASE("rec_eval") {
  CHECK(rec_eval(gaussian(), 0) == 2);
  CHECK(rec_eval(gaussian(), 2) == 6);
  CHECK(rec_eval(lucas(), 4) == 7);
  for (unsigned n = 0; n <= 60; ++n) CHECK(rec_eval(gaussian(), n) == gaussian_trace(n));
  // L_n = F_{n-1} + F_{n+1}.
  std::vector<Int> fib{0, 1};
  while (fib.size() < 80) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  for (unsigned n = 1; n + 1 < fib.size(); ++n) CHECK(rec_eval(lucas(), n) == fib[n - 1] + fib[n + 1]);
  CHECK(rec_eval(two_pow(), 100) == Int(1) << 100);
  CHECK_THROWS_AS(rec_eval(two_pow(), kRecEvalCap + 1), BoundExceeded);
}

TEST_CASE("degenerate recurrences") {
  CHECK(is_degenerate(rec_from_quadratic(2, 1, 2, 2, 0, 2)));    // (x-1)^2
  CHECK(is_degenerate(rec_from_quadratic(0, 1, 2, 0, 0, 2)));    // roots +-i
  CHECK(is_degenerate(rec_from_quadratic(1, 1, 2, 1, 0, 2)));    // primitive 6th roots
  CHECK(is_degenerate(rec_from_quadratic(0, -4, 2, 0, 0, 2)));   // +-2
  CHECK(is_degenerate(make_recurrence({0, 0, 1}, {3, 0, 0}, 0, 2)));  // x^3 - 1
  CHECK(is_degenerate(make_recurrence({0, 0, 8}, {3, 0, 0}, 0, 2)));  // 2 * cube roots of unity
  CHECK_FALSE(is_degenerate(gaussian()));
  CHECK_FALSE(is_degenerate(lucas()));
  CHECK_FALSE(is_degenerate(two_pow()));
  CHECK_FALSE(is_degenerate(rec_from_quadratic(5, 6, 2, 5, 0, 2)));  // 2, 3
  CHECK(is_degenerate(make_recurrence({2, 1, -2}, {3, 2, 6}, 0, 2)));  // 1, -1, 2
  CHECK_FALSE(is_degenerate(make_recurrence({6, -11, 6}, {3, 6, 14}, 0, 2)));  // 1, 2, 3
}

TEST_CASE("rec_mod_scan examples") {
  auto five = rec_mod_scan(two_pow(), 5);
  REQUIRE(std::holds_alternative<PowerClasses>(five));
  CHECK(std::get<PowerClasses>(five).P == 4);
  CHECK(std::get<PowerClasses>(five).residues == std::vector<std::uint64_t>{1, 3});
  auto seven = rec_mod_scan(two_pow(), 7);
  REQUIRE(std::holds_alternative<PowerClasses>(seven));
  CHECK(std::get<PowerClasses>(seven).P == 3);
  CHECK(std::get<PowerClasses>(seven).residues.empty());
  CHECK(std::holds_alternative<BadPrime>(rec_mod_scan(two_pow(), 2)));
  CHECK(std::holds_alternative<BadPrime>(rec_mod_scan(gaussian(), 5)));
  CHECK_THROWS_AS(rec_mod_scan(lucas(), 1009, 100), BoundExceeded);
}

TEST_CASE("rec_mod_scan agrees with exact values") {
  for (const auto& spec : {gaussian(), lucas(), lucas(3), make_recurrence({1, 1, 1}, {0, 0, 1}, -1, 2)}) {
    for (std::uint64_t l : primes_between(3, 120)) {
      auto r = rec_mod_scan(spec, l);
      if (std::holds_alternative<BadPrime>(r)) continue;
      const auto& pc = std::get<PowerClasses>(r);
      const auto powers = dth_powers(spec.power, l);
      std::vector<std::uint64_t> oracle;
      std::vector<Int> values;
      for (std::uint64_t n = 0; n < std::max<std::uint64_t>(pc.P + 100, 200); ++n) {
        if (n < spec.order()) {
          values.push_back(spec.initial[n]);
          continue;
        }
        Int next = 0;
        for (std::size_t i = 0; i < spec.order(); ++i) next += spec.coeffs[i] * values[n - 1 - i];
        values.push_back(next);
      }
      for (std::uint64_t n = 0; n < 200; ++n) CHECK(values[n] == rec_eval(spec, n));
      for (std::uint64_t n = 0; n < pc.P; ++n) {
        const std::uint64_t v = mod_of(values[n] + spec.shift, l);
        if (v != 0 && !powers.count(v)) oracle.push_back(n);
      }
      CHECK(pc.residues == oracle);
      for (std::uint64_t n = 0; n < 100; ++n) CHECK(mod_of(values[n + pc.P] - values[n], l) == 0);
    }
  }
}

TEST_CASE("find_power_free_progression") {
  // 2 is already a non-residue mod 3.
  auto r3 = find_power_free_progression(two_pow(), RecConfig{});
  REQUIRE(std::holds_alternative<PowerFound>(r3));
  CHECK(std::get<PowerFound>(r3).cert.l == 3);
  CHECK(std::get<PowerFound>(r3).cert.P == 2);
  CHECK(std::get<PowerFound>(r3).cert.residues == std::vector<std::uint64_t>{1});

  auto r = find_power_free_progression(two_pow(), RecConfig{.min_prime = 5});
  REQUIRE(std::holds_alternative<PowerFound>(r));
  const auto& cert = std::get<PowerFound>(r).cert;
  CHECK(cert.l == 5);
  CHECK(cert.P == 4);
  CHECK(cert.residues == std::vector<std::uint64_t>{1, 3});
  CHECK(cert.values == std::vector<std::uint64_t>{2, 3});
  CHECK(accepted(verify_power_certificate(cert, two_pow(), 20)));

  auto dflt = find_power_free_progression(gaussian(), RecConfig{});
  REQUIRE(std::holds_alternative<PowerFound>(dflt));
  const auto& pc = std::get<PowerFound>(dflt).cert;
  CHECK(pc.l <= 100'000);
  CHECK_FALSE(std::get<PowerFound>(dflt).degenerate);
  CHECK(accepted(verify_power_certificate(pc, gaussian(), 40)));

  auto six = find_power_free_progression(lucas(6), RecConfig{});
  if (auto* f = std::get_if<PowerFound>(&six)) {
    CHECK(accepted(verify_power_certificate(f->cert, lucas(6), 40)));
  }

  auto deg = find_power_free_progression(rec_from_quadratic(2, 1, 2, 2, 0, 2), RecConfig{.max_prime = 50});
  const auto& trace = std::holds_alternative<PowerFound>(deg) ? std::get<PowerFound>(deg).trace
                                                              : std::get<Exhausted>(deg).trace;
  CHECK(trace.log.front().rfind("warning", 0) == 0);
}

TEST_CASE("2^n certificates only certify odd n") {
  for (std::uint64_t start : {3, 11, 50, 200, 1000}) {
    auto r = find_power_free_progression(two_pow(), RecConfig{.min_prime = start, .max_prime = 5000});
    REQUIRE(std::holds_alternative<PowerFound>(r));
    const auto& cert = std::get<PowerFound>(r).cert;
    for (std::uint64_t n = 0; n < 3 * cert.P; ++n) {
      if (std::binary_search(cert.residues.begin(), cert.residues.end(), n % cert.P)) CHECK(n % 2 == 1);
    }
    CHECK(accepted(verify_power_certificate(cert, two_pow(), 40)));
  }
}

TEST_CASE("verify_power_certificate rejects tampering") {
  auto cert = std::get<PowerFound>(find_power_free_progression(two_pow(), RecConfig{.min_prime = 5})).cert;
  auto injected = cert;
  injected.residues = {1, 2, 3};
  injected.values = {2, 4, 3};
  auto r = verify_power_certificate(injected, two_pow(), 20);
  REQUIRE(std::holds_alternative<Reject>(r));
  CHECK(std::get<Reject>(r).witness == 2);

  auto wrong_value = cert;
  wrong_value.values[0] = 3;
  CHECK_FALSE(accepted(verify_power_certificate(wrong_value, two_pow(), 20)));

  auto wrong_period = cert;
  wrong_period.P = 6;
  CHECK_FALSE(accepted(verify_power_certificate(wrong_period, two_pow(), 20)));

  CHECK_FALSE(accepted(verify_power_certificate(cert, lucas(), 20)));

  // P = 8 is a multiple of the true period, which is still sound.
  auto doubled = cert;
  doubled.P = 8;
  doubled.residues = {1, 3, 5, 7};
  doubled.values = {2, 3, 2, 3};
  CHECK(accepted(verify_power_certificate(doubled, two_pow(), 20)));
}
