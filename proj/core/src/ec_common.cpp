#include <numeric>

#include "hitforge/elliptic.hpp"

namespace hitforge {

Rat discriminant(const EllipticCurveQ& E) { return Rat(-16) * (Rat(4) * E.A * E.A * E.A + Rat(27) * E.B * E.B); }

EllipticCurveQ make_curve(const Rat& A, const Rat& B) {
  EllipticCurveQ E{A, B};
  E.A.canonicalize();
  E.B.canonicalize();
  if (discriminant(E) == 0) throw InputError("singular curve: 4A^3 + 27B^2 = 0");
  return E;
}

// ---- over Q ----------------------------------------------------------------

PointQ rational_point(const Rat& x, const Rat& y) { return PointQ{false, x, y}; }

bool on_curve(const EllipticCurveQ& E, const PointQ& P) {
  return P.infinity || P.y * P.y == P.x * P.x * P.x + E.A * P.x + E.B;
}

PointQ ec_neg(const PointQ& P) { return P.infinity ? P : rational_point(P.x, -P.y); }

PointQ ec_add(const EllipticCurveQ& E, const PointQ& P, const PointQ& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  Rat lambda;
  if (P.x == Q.x) {
    if (P.y + Q.y == 0) return PointQ{};
    lambda = (Rat(3) * P.x * P.x + E.A) / (Rat(2) * P.y);
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  const Rat x = lambda * lambda - P.x - Q.x;
  return rational_point(x, lambda * (P.x - x) - P.y);
}

PointQ ec_mul(const EllipticCurveQ& E, std::uint64_t n, const PointQ& P) {
  PointQ acc, base = P;
  for (; n > 0; n >>= 1) {
    if (n & 1) acc = ec_add(E, acc, base);
    if (n > 1) base = ec_add(E, base, base);
  }
  return acc;
}

bool is_non_torsion(const EllipticCurveQ& E, const PointQ& P) {
  PointQ Q;
  for (unsigned n = 1; n <= 12; ++n) {
    Q = ec_add(E, Q, P);
    if (n != 11 && Q.infinity) return false;
  }
  return true;
}

// ---- over F_l --------------------------------------------------------------

PointFl affine_point(std::uint64_t x, std::uint64_t y) { return PointFl{false, x, y}; }

bool on_curve(const CurveFl& E, const PointFl& P) {
  if (P.infinity) return true;
  const std::uint64_t l = E.l;
  const std::uint64_t rhs = (mulmod(mulmod(P.x, P.x, l), P.x, l) + mulmod(E.a, P.x, l) + E.b) % l;
  return mulmod(P.y, P.y, l) == rhs;
}

PointFl ec_neg(const CurveFl& E, const PointFl& P) {
  return P.infinity ? P : affine_point(P.x, P.y == 0 ? 0 : E.l - P.y);
}

PointFl ec_add(const CurveFl& E, const PointFl& P, const PointFl& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const std::uint64_t l = E.l;
  std::uint64_t lambda;
  if (P.x == Q.x) {
    if ((P.y + Q.y) % l == 0) return PointFl{};
    const std::uint64_t num = (mulmod(3, mulmod(P.x, P.x, l), l) + E.a) % l;
    lambda = mulmod(num, invmod(mulmod(2, P.y, l), l), l);
  } else {
    lambda = mulmod((Q.y + l - P.y) % l, invmod((Q.x + l - P.x) % l, l), l);
  }
  const std::uint64_t x = (mulmod(lambda, lambda, l) + 2 * l - P.x - Q.x) % l;
  const std::uint64_t y = (mulmod(lambda, (P.x + l - x) % l, l) + l - P.y) % l;
  return affine_point(x, y);
}

PointFl ec_mul(const CurveFl& E, std::uint64_t n, const PointFl& P) {
  PointFl acc, base = P;
  for (; n > 0; n >>= 1) {
    if (n & 1) acc = ec_add(E, acc, base);
    if (n > 1) base = ec_add(E, base, base);
  }
  return acc;
}

std::variant<CurveFl, BadReduction> ec_reduce(const EllipticCurveQ& E, std::uint64_t l) {
  if (l <= 3 || !is_prime(l)) throw PreconditionFailed("ec_reduce needs a prime l > 3");
  const auto a = reduce_rational(E.A, l), b = reduce_rational(E.B, l);
  if (!a || !b) return BadReduction{"l divides a denominator of A or B"};
  const std::uint64_t disc = (mulmod(4, mulmod(mulmod(*a, *a, l), *a, l), l) + mulmod(27, mulmod(*b, *b, l), l)) % l;
  if (disc == 0) return BadReduction{"discriminant vanishes mod l"};
  return CurveFl{l, *a, *b};
}

PointFl ec_reduce_point(const PointQ& P, std::uint64_t l) {
  if (P.infinity) return PointFl{};
  const auto x = reduce_rational(P.x, l), y = reduce_rational(P.y, l);
  if (!x || !y) return PointFl{};
  return affine_point(*x, *y);
}

namespace {

// sqrt_of[v] + 1 for squares v != 0, 0 otherwise.
std::vector<std::uint32_t> square_roots(std::uint64_t l) {
  std::vector<std::uint32_t> root(l, 0);
  for (std::uint64_t y = 1; y <= l / 2; ++y) root[mulmod(y, y, l)] = static_cast<std::uint32_t>(y + 1);
  return root;
}

std::uint64_t rhs(const CurveFl& E, std::uint64_t x) {
  const std::uint64_t l = E.l;
  return (mulmod(mulmod(x, x, l), x, l) + mulmod(E.a, x, l) + E.b) % l;
}

}  // namespace

std::uint64_t ec_count_points(const CurveFl& E) {
  if (E.l > kPointCountCap) throw BoundExceeded("ec_count_points: l exceeds 2^20");
  const auto root = square_roots(E.l);
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < E.l; ++x) {
    const std::uint64_t v = rhs(E, x);
    n += v == 0 ? 1 : (root[v] ? 2 : 0);
  }
  return n;
}

std::vector<PointFl> ec_points(const CurveFl& E) {
  if (E.l > kPointCountCap) throw BoundExceeded("ec_points: l exceeds 2^20");
  const auto root = square_roots(E.l);
  std::vector<PointFl> pts{PointFl{}};
  for (std::uint64_t x = 0; x < E.l; ++x) {
    const std::uint64_t v = rhs(E, x);
    if (v == 0) {
      pts.push_back(affine_point(x, 0));
    } else if (root[v]) {
      const std::uint64_t y = root[v] - 1;
      pts.push_back(affine_point(x, y));
      pts.push_back(affine_point(x, E.l - y));
    }
  }
  return pts;
}

std::uint64_t ec_point_order(const CurveFl& E, const PointFl& P, std::uint64_t N) {
  if (!ec_mul(E, N, P).infinity) throw PreconditionFailed("ec_point_order: N is not a multiple of the order");
  std::uint64_t ord = N;
  for (const auto& [p, e] : factorize_u64(N)) {
    for (unsigned i = 0; i < e && ec_mul(E, ord / p, P).infinity; ++i) ord /= p;
  }
  return ord;
}

FrobeniusData ec_frobenius(const EllipticCurveQ& E, std::uint64_t l, unsigned m_max) {
  auto red = ec_reduce(E, l);
  if (auto* bad = std::get_if<BadReduction>(&red)) throw PreconditionFailed("bad reduction at l: " + bad->reason);
  if (l > kGroupShapeCap) throw BoundExceeded("ec_frobenius: group shape needs l <= 2^16");
  const CurveFl& C = std::get<CurveFl>(red);
  FrobeniusData fd;
  fd.l = l;
  fd.N1 = ec_count_points(C);
  fd.a_l = static_cast<std::int64_t>(l + 1) - static_cast<std::int64_t>(fd.N1);
  const Int a(static_cast<long>(fd.a_l)), q(static_cast<unsigned long>(l));
  Int s_prev = 2, s = a, qm = q;
  for (unsigned m = 1; m <= m_max; ++m) {
    fd.gamma.push_back(qm + 1 - s);
    const Int next = a * s - q * s_prev;
    s_prev = s;
    s = next;
    qm *= q;
  }
  std::uint64_t exponent = 1;
  for (const auto& P : ec_points(C)) exponent = std::lcm(exponent, ec_point_order(C, P, fd.N1));
  fd.shape_b = exponent;
  fd.shape_a = fd.N1 / exponent;
  return fd;
}

FiberSpec make_fiber(const MPolyQ& f) {
  for (Var v : f.variables()) {
    if (v != Var::X && v != Var::Y && v != Var::T) {
      throw InputError("fiber polynomial may only involve X, Y, T; found " + std::string(var_name(v)));
    }
  }
  const unsigned d = f.degree(Var::T);
  if (d == 0) throw InputError("fiber polynomial must involve T");
  return FiberSpec{f.primitive_integral(), d};
}

}  // namespace hitforge
