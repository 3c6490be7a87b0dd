#include <numeric>

#include "hitforge/digest.hpp"
#include "hitforge/errors.hpp"
#include "hitforge/recurrence.hpp"

namespace hitforge {

RecurrenceSpec make_recurrence(std::vector<Int> coeffs, std::vector<Int> initial, Int shift, unsigned power) {
  if (coeffs.empty()) throw InputError("recurrence order must be at least 1");
  if (coeffs.back() == 0) throw InputError("last recurrence coefficient must be nonzero");
  if (initial.size() != coeffs.size()) {
    throw InputError("recurrence of order " + std::to_string(coeffs.size()) + " needs " +
                     std::to_string(coeffs.size()) + " initial values, got " + std::to_string(initial.size()));
  }
  if (power < 2) throw InputError("power must be at least 2");
  return RecurrenceSpec{std::move(coeffs), std::move(initial), std::move(shift), power};
}

RecurrenceSpec rec_from_quadratic(const Int& trace, const Int& norm, const Int& u0, const Int& u1, const Int& e,
                                  unsigned d) {
  return make_recurrence({trace, -norm}, {u0, u1}, e, d);
}

namespace {

bool has_repeated_root(const QPoly& p) { return qpoly::gcd(p, qpoly::derivative(p)).degree() > 0; }

unsigned euler_phi(unsigned m) {
  unsigned phi = m;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    phi -= phi / p;
  }
  if (m > 1) phi -= phi / m;
  return phi;
}

}  // namespace

bool is_degenerate(const RecurrenceSpec& spec) {
  const std::size_t k = spec.order();
  QPoly charpoly;
  charpoly.c.resize(k + 1);
  for (std::size_t i = 0; i < k; ++i) charpoly.c[k - 1 - i] = -Rat(spec.coeffs[i]);
  charpoly.c[k] = 1;
  if (has_repeated_root(charpoly)) return true;
  if (k == 1) return false;

  // alpha/beta of order m means alpha^m = beta^m, a repeated root of the
  // polynomial whose roots are the m-th powers.  phi(m) <= k(k-1) bounds m,
  // and phi(m) >= sqrt(m/2) gives m <= 2 (k(k-1))^2.
  const unsigned K = static_cast<unsigned>(k * (k - 1));
  const unsigned m_max = 2 * K * K;
  // Power sums p_n of the roots satisfy the recurrence itself; p_1..p_{k-1}
  // come from Newton's identities.
  std::vector<Int> ps(static_cast<std::size_t>(k) * m_max + 1);
  ps[0] = static_cast<unsigned long>(k);
  for (std::size_t n = 1; n < ps.size(); ++n) {
    Int acc = 0;
    for (std::size_t i = 1; i <= std::min(n, k); ++i) {
      acc += spec.coeffs[i - 1] * (i == n ? Int(static_cast<unsigned long>(n)) : ps[n - i]);
    }
    ps[n] = acc;
  }
  for (unsigned m = 2; m <= m_max; ++m) {
    if (euler_phi(m) > K) continue;
    std::vector<Rat> E(k + 1);
    E[0] = 1;
    for (std::size_t j = 1; j <= k; ++j) {
      Rat acc = 0;
      for (std::size_t i = 1; i <= j; ++i) {
        const Rat term = E[j - i] * Rat(ps[i * m]);
        acc += (i % 2 == 1) ? term : Rat(-term);
      }
      E[j] = acc / static_cast<unsigned long>(j);
    }
    QPoly q;
    q.c.resize(k + 1);
    for (std::size_t j = 0; j <= k; ++j) q.c[k - j] = (j % 2 == 0) ? E[j] : Rat(-E[j]);
    if (has_repeated_root(q)) return true;
  }
  return false;
}

std::string canonical_text(const RecurrenceSpec& spec) {
  auto join = [](const std::vector<Int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s;
  };
  return "coeffs=" + join(spec.coeffs) + ";init=" + join(spec.initial) + ";shift=" + spec.shift.get_str() +
         ";power=" + std::to_string(spec.power);
}

std::string digest_of(const RecurrenceSpec& spec) { return sha256_hex(canonical_text(spec)); }

Int rec_eval(const RecurrenceSpec& spec, std::uint64_t n) {
  if (n > kRecEvalCap) throw BoundExceeded("rec_eval: n = " + std::to_string(n) + " exceeds 10^6");
  const std::size_t k = spec.order();
  if (n < k) return spec.initial[n];
  std::vector<Int> window = spec.initial;  // u_{j}..u_{j+k-1}
  for (std::uint64_t j = k; j <= n; ++j) {
    Int next = 0;
    for (std::size_t i = 0; i < k; ++i) next += spec.coeffs[i] * window[k - 1 - i];
    window.erase(window.begin());
    window.push_back(std::move(next));
  }
  return window.back();
}

}  // namespace hitforge
