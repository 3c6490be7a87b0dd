#include <algorithm>

#include "hitforge/digest.hpp"
#include "hitforge/kron.hpp"

namespace hitforge {

namespace {

std::optional<std::string> check_flag(const MPolyQ& f, const SubgroupScan& scan, const ExceptionalVector& v) {
  const std::string where = "flagged vector: ";
  if (v.reason == "degenerate") {
    if (std::find(v.a.begin(), v.a.end(), 0) == v.a.end()) return where + "degenerate without a zero entry";
    return std::nullopt;
  }
  if (v.reason == "unknown") return std::nullopt;
  if (v.reason != "degree-drop" && v.reason != "factorization") return where + "unrecognized reason " + v.reason;
  const std::uint64_t l = scan.l;
  if (v.order == 0 || (l - 1) % v.order != 0) return where + "order does not divide l - 1";
  if (v.theta.size() != v.a.size()) return where + "one theta per exponent is required";
  for (auto th : v.theta) {
    if (th == 0 || th >= l || powmod(th, v.order, l) != 1) return where + "theta is not a root of unity of the order";
  }
  auto sub = kron_substitute_mod(f, v.a, v.theta, l);
  if (std::holds_alternative<BadPrime>(sub)) return where + "bad prime";
  const auto& g = std::get<MPolyFp>(sub);
  const unsigned d = f.degree(Var::y);
  if (v.reason == "degree-drop") {
    if (g.degree(Var::y) == d) return where + "no degree drop";
    return std::nullopt;
  }
  if (d != 2 || g.degree(Var::y) != 2 || !discriminant_square_mod(g)) return where + "discriminant is not a square";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_kron_report(const KronReport& report) {
  if (report.f_digest != poly_digest(report.f)) return "polynomial digest mismatch";
  const CoverSpec c = make_cover(report.f);
  for (const auto& v : report.verdicts) {
    if (v.m < report.m_lo || v.m > report.m_hi) return "m = " + std::to_string(v.m) + " outside the tested range";
    const auto sub = kron_substitute(report.f, kronecker_exponents(v.m, c.r));
    if (!(sub.g == v.substituted) || sub.collapsed != v.collapsed) {
      return "m = " + std::to_string(v.m) + ": substitution differs";
    }
    if (const auto* w = std::get_if<AbsIrredWitness>(&v.verdict)) {
      if (auto why = check_abs_irred_witness(v.substituted, *w)) return "m = " + std::to_string(v.m) + ": " + *why;
    }
  }
  if (report.subgroups) {
    const auto& scan = *report.subgroups;
    if (scan.l < 3 || !is_prime(scan.l)) return "subgroup scan prime is not an odd prime";
    for (const auto& v : scan.flagged) {
      if (auto why = check_flag(report.f, scan, v)) return why;
    }
  }
  return std::nullopt;
}

}  // namespace hitforge
