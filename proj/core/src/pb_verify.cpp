#include "hitforge/pb_gate.hpp"

namespace hitforge {
namespace {

bool y_content_trivial(const MPolyQ& f) { return content_in(f, Var::y).is_constant(); }

std::optional<std::string> check_specialization(const MPolyQ& f, const SpecializationWitness& w) {
  const unsigned d = f.degree(Var::y);
  if (d < 2) return "specialization witness needs deg_y >= 2";
  if (w.L != lcm_upto(d)) return "extension degree is not lcm(1..d)";
  if (w.l > (std::uint64_t{1} << 32) || !is_prime(w.l)) return "witness prime is not a small prime";
  const FieldDescriptor fd{w.l, w.L, w.modulus};
  if (!descriptor_valid(fd)) return "field modulus is not irreducible of the stated degree";
  if (!y_content_trivial(f)) return "nontrivial y-content";
  auto red = reduce_mod(f, w.l);
  if (auto* bad = std::get_if<BadPrime>(&red)) return "bad reduction: " + bad->reason;
  const ExtField F(fd);
  std::map<Var, ExtField::Elem> point;
  for (const auto& [v, value] : w.point) {
    if (value.size() != w.L) return "point coordinate has the wrong length";
    for (auto c : value) {
      if (c >= w.l) return "point coordinate is not reduced";
    }
    point[v] = value;
  }
  for (Var v : f.variables()) {
    if (v != Var::y && !point.count(v)) return "point misses variable " + std::string(var_name(v));
  }
  const auto sp = specialize(F, std::get<MPolyFp>(red), point);
  if (!sp.degree_preserved) return "specialization drops the y-degree";
  if (sp.poly.c != w.fiber) return "recorded fiber does not match the recomputation";
  if (!upoly::is_irreducible(F, sp.poly)) return "specialized fiber is reducible over F_{l^L}";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_abs_irred_witness(const MPolyQ& f, const AbsIrredWitness& w) {
  if (std::holds_alternative<LinearWitness>(w)) {
    if (f.degree(Var::y) != 1) return "linear witness for a polynomial of y-degree != 1";
    if (!y_content_trivial(f)) return "nontrivial y-content";
    return std::nullopt;
  }
  if (const auto* dw = std::get_if<DiscriminantWitness>(&w)) {
    if (f.degree(Var::y) != 2) return "discriminant witness for a polynomial of y-degree != 2";
    if (!y_content_trivial(f)) return "nontrivial y-content";
    const MPolyQ disc = discriminant_quadratic(f, Var::y);
    if (!(disc == dw->discriminant)) return "recorded discriminant does not match";
    if (square_up_to_constant(disc).is_square) return "discriminant is a square up to a constant";
    return std::nullopt;
  }
  return check_specialization(f, std::get<SpecializationWitness>(w));
}

std::optional<std::string> check_pb_verdict(const CoverSpec& c, const PBVerdict& v) {
  if (std::holds_alternative<Unknown>(v)) return "Unknown verdicts carry no evidence";
  if (const auto* pb = std::get_if<CertifiedPB>(&v)) {
    return check_abs_irred_witness(pullback(c.f, c.d), pb->witness);
  }
  const auto& ev = std::get<CertifiedNotPB>(v).evidence;
  if (const auto* ef = std::get_if<ExplicitFactor>(&ev)) {
    if (ef->m < 2 || c.d % ef->m != 0) return "factor is not for a divisor m > 1 of d";
    const MPolyQ g = pullback(c.f, ef->m);
    const unsigned deg = ef->factor.degree(Var::y);
    if (deg == 0 || deg >= c.d) return "factor is not a proper factor in y";
    if (!divide_exact(g, ef->factor)) return "factor does not divide the pull-back";
    return std::nullopt;
  }
  const auto& sd = std::get<SquareDiscriminant>(ev);
  if (c.d != 2) return "square-discriminant evidence needs d = 2";
  const MPolyQ disc = discriminant_quadratic(pullback(c.f, 2), Var::y);
  if (!(disc == sd.discriminant)) return "recorded discriminant does not match";
  if (!(sd.root * sd.root * sd.constant == disc)) return "discriminant != constant * root^2";
  return std::nullopt;
}

}  // namespace hitforge
