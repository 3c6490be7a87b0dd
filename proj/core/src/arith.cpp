#include "hitforge/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "hitforge/errors.hpp"

namespace hitforge {
namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<bool> composite(kTrialLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return table;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const Int& n, unsigned long a) {
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Int x;
  Int base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Int nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == nm1) return true;
  }
  return false;
}

Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int half_mod(const Int& a, const Int& n) {
  Int v = mod_pos(a, n);
  if (mpz_odd_p(v.get_mpz_t())) v += n;
  return v / 2;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
bool strong_lucas_probable_prime(const Int& n) {
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;
  long D = 5;
  for (;;) {
    Int dd = D;
    int j = mpz_jacobi(dd.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && abs(dd) != n) return false;
    D = D > 0 ? -(D + 2) : -(D - 2);
  }
  const Int P = 1;
  const Int Q = Int(1 - D) / 4;
  const Int Dz = D;
  Int d = n + 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  Int U = 1, V = P, Qk = mod_pos(Q, n);
  const std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    U = mod_pos(U * V, n);
    V = mod_pos(V * V - 2 * Qk, n);
    Qk = mod_pos(Qk * Qk, n);
    if (mpz_tstbit(d.get_mpz_t(), i)) {
      Int U2 = half_mod(P * U + V, n);
      Int V2 = half_mod(Dz * U + P * V, n);
      U = U2;
      V = V2;
      Qk = mod_pos(Qk * Q, n);
    }
  }
  if (U == 0 || V == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    V = mod_pos(V * V - 2 * Qk, n);
    if (V == 0) return true;
    Qk = mod_pos(Qk * Qk, n);
  }
  return false;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
std::uint64_t rho_u64(std::uint64_t n, std::uint64_t c, std::uint64_t budget) {
  if (n % 2 == 0) return 2;
  std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
  std::uint64_t r = 1, iterations = 0;
  const std::uint64_t m = 128;
  auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t lim = std::min(m, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u64(q, n);
      k += m;
      iterations += lim;
      if (iterations > budget) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

Int rho_big(const Int& n, unsigned long c, std::uint64_t budget) {
  Int y = 2, x = 2, g = 1, q = 1, ys = 2;
  std::uint64_t r = 1, iterations = 0;
  const std::uint64_t m = 128;
  auto f = [&](const Int& v) { return Int((v * v + c) % n); };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t lim = std::min(m, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = f(y);
        q = (q * abs(x - y)) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
      iterations += lim;
      if (iterations > budget) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Int diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? Int(0) : g;
}

void split_cofactor(const Int& n, std::map<Int, unsigned>& out, const FactorOptions& opts) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int factor = 0;
  for (unsigned long c = 1; c <= 16 && factor == 0; ++c) {
    if (n.fits_ulong_p()) {
      factor = Int(static_cast<unsigned long>(rho_u64(n.get_ui(), c, opts.rho_budget)));
    } else {
      factor = rho_big(n, c, opts.rho_budget);
    }
  }
  if (factor == 0) throw BoundExceeded("factorize: cofactor " + n.get_str() + " resisted Pollard rho");
  split_cofactor(factor, out, opts);
  split_cofactor(n / factor, out, opts);
}

}  // namespace

Int FactoredInt::value() const {
  Int v = sign;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic for n < 2^64 with the first twelve prime bases.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  return strong_probable_prime(n, 2) && strong_lucas_probable_prime(n);
}

FactoredInt factorize(const Int& n, const FactorOptions& opts) {
  FactoredInt out;
  out.sign = sgn(n);
  if (n == 0) return out;
  Int m = abs(n);
  if (mpz_sizeinbase(m.get_mpz_t(), 2) > opts.max_bits) {
    throw BoundExceeded("factorize: |n| exceeds " + std::to_string(opts.max_bits) + " bits");
  }
  for (std::uint32_t p : small_primes()) {
    if (Int(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      out.factors[Int(p)] = e;
    }
  }
  if (m > 1) split_cofactor(m, out.factors, opts);
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  if (n < 2) return out;
  std::map<std::uint64_t, unsigned> acc;
  for (std::uint32_t p : small_primes()) {
    if (std::uint64_t{p} * p > n) break;
    while (n % p == 0) {
      n /= p;
      ++acc[p];
    }
  }
  std::vector<std::uint64_t> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    std::uint64_t v = stack.back();
    stack.pop_back();
    if (is_prime(v)) {
      ++acc[v];
      continue;
    }
    std::uint64_t f = 0;
    for (std::uint64_t c = 1; c <= 16 && f == 0; ++c) f = rho_u64(v, c, 10'000'000);
    if (f == 0) throw BoundExceeded("factorize_u64: rho budget exhausted");
    stack.push_back(f);
    stack.push_back(v / f);
  }
  out.assign(acc.begin(), acc.end());
  return out;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || hi < lo) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  if (hi < kTrialLimit) {
    for (std::uint32_t p : small_primes()) {
      if (p > hi) break;
      if (p >= lo) out.push_back(p);
    }
    return out;
  }
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == hi) break;
  }
  return out;
}

CongruenceClass make_class(const Int& residue, const Int& modulus) {
  if (modulus < 1) throw InputError("congruence modulus must be >= 1");
  return {mod_pos(residue, modulus), modulus};
}

std::optional<CongruenceClass> crt(std::span<const CongruenceClass> classes) {
  Int a = 0, m = 1;
  for (const auto& c : classes) {
    if (c.modulus < 1) throw InputError("congruence modulus must be >= 1");
    // Solve a + m*k = b (mod n).
    const Int b = mod_pos(c.residue, c.modulus);
    const Int& n = c.modulus;
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    const Int diff = b - a;
    if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
    const Int n_g = n / g;
    const Int k = mod_pos((diff / g) * s, n_g);
    a += m * k;
    m *= n_g;
    a = mod_pos(a, m);
  }
  return CongruenceClass{a, m};
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw Error("invmod: not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t mod_of(const Int& a, std::uint64_t m) {
  return static_cast<std::uint64_t>(mpz_fdiv_ui(a.get_mpz_t(), m));
}

std::optional<std::uint64_t> reduce_rational(const Rat& x, std::uint64_t l) {
  const std::uint64_t den = mod_of(x.get_den(), l);
  if (den == 0) return std::nullopt;
  return mulmod(mod_of(x.get_num(), l), invmod(den, l), l);
}

std::uint64_t mult_order(std::uint64_t g, std::uint64_t l) {
  g %= l;
  if (g == 0) throw PreconditionFailed("mult_order: l divides g");
  std::uint64_t t = l - 1;
  for (auto [q, e] : factorize_u64(l - 1)) {
    for (unsigned i = 0; i < e && t % q == 0; ++i) {
      if (powmod(g, t / q, l) != 1) break;
      t /= q;
    }
  }
  return t;
}

std::uint64_t mult_order(const Int& g, std::uint64_t l) { return mult_order(mod_of(g, l), l); }

std::uint64_t primitive_root(std::uint64_t l) {
  if (l == 2) return 1;
  const auto fac = factorize_u64(l - 1);
  for (std::uint64_t g = 2; g < l; ++g) {
    bool ok = true;
    for (auto [q, e] : fac) {
      if (powmod(g, (l - 1) / q, l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error("primitive_root: none found (l not prime?)");
}

namespace {

// Baby-step/giant-step for an element of known prime order q.
std::uint64_t bsgs(std::uint64_t g, std::uint64_t h, std::uint64_t q, std::uint64_t l,
                   std::uint64_t leaf_budget) {
  if (q > leaf_budget) throw BoundExceeded("discrete_log: prime-order leaf too large");
  const std::uint64_t m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(q))));
  std::unordered_map<std::uint64_t, std::uint64_t> table;
  table.reserve(m * 2);
  std::uint64_t cur = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    table.emplace(cur, j);
    cur = mulmod(cur, g, l);
  }
  const std::uint64_t step = invmod(powmod(g, m, l), l);
  std::uint64_t gamma = h;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = table.find(gamma); it != table.end()) return (i * m + it->second) % q;
    gamma = mulmod(gamma, step, l);
  }
  throw Error("discrete_log: leaf has no solution");
}

}  // namespace

std::optional<std::uint64_t> discrete_log(std::uint64_t g, std::uint64_t h, std::uint64_t l,
                                          std::uint64_t leaf_budget) {
  g %= l;
  h %= l;
  if (g == 0 || h == 0) throw PreconditionFailed("discrete_log: l divides g*h");
  const std::uint64_t n = mult_order(g, l);
  if (powmod(h, n, l) != 1) return std::nullopt;
  std::vector<CongruenceClass> parts;
  for (auto [q, e] : factorize_u64(n)) {
    std::uint64_t qe = 1;
    for (unsigned i = 0; i < e; ++i) qe *= q;
    const std::uint64_t gq = powmod(g, n / qe, l);
    const std::uint64_t hq = powmod(h, n / qe, l);
    const std::uint64_t gamma = powmod(gq, qe / q, l);  // order q
    std::uint64_t x = 0, qk = 1;
    for (unsigned k = 0; k < e; ++k) {
      const std::uint64_t shifted = mulmod(invmod(powmod(gq, x, l), l), hq, l);
      const std::uint64_t hk = powmod(shifted, qe / qk / q, l);
      const std::uint64_t digit = bsgs(gamma, hk, q, l, leaf_budget);
      x += digit * qk;
      qk *= q;
    }
    parts.push_back({Int(static_cast<unsigned long>(x)), Int(static_cast<unsigned long>(qe))});
  }
  auto joined = crt(parts);
  if (!joined) throw Error("discrete_log: inconsistent Pohlig-Hellman parts");
  return static_cast<std::uint64_t>(joined->residue.get_ui());
}

bool dth_power_residue(std::uint64_t a, std::uint64_t d, std::uint64_t l) {
  a %= l;
  if (a == 0) throw PreconditionFailed("dth_power_residue: l divides a");
  const std::uint64_t g = std::gcd(d, l - 1);
  return powmod(a, (l - 1) / g, l) == 1;
}

IndependenceVerdict mult_independent(std::span<const Rat> xs, const FactorOptions& opts) {
  const std::size_t r = xs.size();
  std::map<Int, std::vector<Int>> valuation_rows;
  std::vector<int> sign_row(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (xs[i] == 0) throw PreconditionFailed("mult_independent: zero entry");
    sign_row[i] = xs[i] < 0 ? 1 : 0;
    for (auto [num, s] : {std::pair{xs[i].get_num(), 1}, std::pair{xs[i].get_den(), -1}}) {
      for (const auto& [p, e] : factorize(num, opts).factors) {
        auto& row = valuation_rows[p];
        row.resize(r, 0);
        row[i] += s * static_cast<long>(e);
      }
    }
  }

  // Column-style integer echelon form on A with the transform U tracked;
  // columns of U whose image vanishes span ker(A).
  std::vector<std::vector<Int>> a;
  for (auto& [p, row] : valuation_rows) a.push_back(row);
  std::vector<std::vector<Int>> u(r, std::vector<Int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& k) {
    for (auto& row : a) row[dst] -= k * row[src];
    for (auto& row : u) row[dst] -= k * row[src];
  };
  auto col_swap = [&](std::size_t c1, std::size_t c2) {
    for (auto& row : a) std::swap(row[c1], row[c2]);
    for (auto& row : u) std::swap(row[c1], row[c2]);
  };
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < a.size() && pivot < r; ++i) {
    for (;;) {
      std::size_t best = r;
      for (std::size_t j = pivot; j < r; ++j) {
        if (a[i][j] != 0 && (best == r || abs(a[i][j]) < abs(a[i][best]))) best = j;
      }
      if (best == r) break;
      bool others = false;
      for (std::size_t j = pivot; j < r; ++j) {
        if (j == best || a[i][j] == 0) continue;
        Int k;
        mpz_fdiv_q(k.get_mpz_t(), a[i][j].get_mpz_t(), a[i][best].get_mpz_t());
        col_axpy(j, best, k);
        if (a[i][j] != 0) others = true;
      }
      if (!others) {
        col_swap(pivot, best);
        ++pivot;
        break;
      }
    }
  }
  if (pivot == r) return Independent{};

  std::vector<std::vector<Int>> kernel;
  for (std::size_t j = pivot; j < r; ++j) {
    std::vector<Int> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = u[i][j];
    Int g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1) {
      for (auto& x : v) x /= g;
    }
    kernel.push_back(std::move(v));
  }
  auto parity = [&](const std::vector<Int>& v) {
    Int s = 0;
    for (std::size_t i = 0; i < r; ++i) s += v[i] * sign_row[i];
    return mpz_odd_p(s.get_mpz_t()) != 0;
  };
  std::vector<Int> chosen;
  for (const auto& v : kernel) {
    if (!parity(v)) {
      chosen = v;
      break;
    }
  }
  if (chosen.empty()) {
    chosen = kernel[0];
    if (kernel.size() >= 2) {
      for (std::size_t i = 0; i < r; ++i) chosen[i] += kernel[1][i];
    } else {
      for (auto& x : chosen) x *= 2;
    }
  }
  for (const auto& x : chosen) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : chosen) y = -y;
    }
    break;
  }
  return Dependent{std::move(chosen)};
}

Rat multiplicative_combination(std::span<const Rat> xs, std::span<const Int> e) {
  Rat acc = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Int n = xs[i].get_num(), d = xs[i].get_den();
    Int k = abs(e[i]);
    if (!k.fits_ulong_p()) throw BoundExceeded("exponent too large");
    Int np, dp;
    mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), k.get_ui());
    Rat term(np, dp);
    term.canonicalize();
    if (e[i] < 0) term = 1 / term;
    acc *= term;
  }
  return acc;
}

Rat parse_rational(const std::string& text) {
  Rat v;
  std::string t;
  for (char c : text) {
    if (c != ' ' && c != '(' && c != ')') t += c;
  }
  if (t.empty() || v.set_str(t, 10) != 0) throw InputError("not a rational number: '" + text + "'");
  if (v.get_den() == 0) throw InputError("zero denominator: '" + text + "'");
  v.canonicalize();
  return v;
}

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace hitforge
