#include <algorithm>
#include <numeric>

#include "hitforge/recurrence.hpp"

namespace hitforge {

namespace {

constexpr std::uint64_t kMaxCertifiedPeriod = 10'000'000;

Reject reject(std::string why, std::optional<std::int64_t> n = std::nullopt) { return Reject{std::move(why), n}; }

}  // namespace

VerifyResult verify_power_certificate(const PowerCertificate& cert, const RecurrenceSpec& spec,
                                      std::uint64_t exact_bound) {
  if (!(cert.spec == spec)) return reject("certificate was issued for a different recurrence");
  if (cert.spec_digest != digest_of(spec)) return reject("recurrence digest mismatch");
  const std::uint64_t l = cert.l;
  if (l < 3 || !is_prime(l)) return reject("l is not an odd prime");
  if (mod_of(spec.coeffs.back(), l) == 0) return reject("BadPrime: l divides the last recurrence coefficient");
  if (cert.P == 0 || cert.P > kMaxCertifiedPeriod) return reject("period out of range");
  if (cert.values.size() != cert.residues.size()) return reject("one value per residue is required");
  for (std::size_t i = 0; i < cert.residues.size(); ++i) {
    if (cert.residues[i] >= cert.P) return reject("residue not below P", static_cast<std::int64_t>(cert.residues[i]));
    if (i > 0 && cert.residues[i] <= cert.residues[i - 1]) return reject("residues not strictly ascending");
  }

  const std::size_t k = spec.order();
  std::vector<std::uint64_t> c(k), init(k);
  for (std::size_t i = 0; i < k; ++i) {
    c[i] = mod_of(spec.coeffs[i], l);
    init[i] = mod_of(spec.initial[i], l);
  }
  const std::uint64_t e = mod_of(spec.shift, l);
  const std::uint64_t euler = (l - 1) / std::gcd<std::uint64_t>(spec.power, l - 1);
  std::vector<std::uint64_t> state = init;
  std::size_t next = 0;
  for (std::uint64_t n = 0; n < cert.P; ++n) {
    if (next < cert.residues.size() && cert.residues[next] == n) {
      const std::uint64_t v = (state[0] + e) % l;
      if (v != cert.values[next]) return reject("recorded value differs mod l", static_cast<std::int64_t>(n));
      if (v == 0) return reject("u_n + e vanishes mod l", static_cast<std::int64_t>(n));
      // Euler's criterion for the subgroup of d-th powers.
      if (powmod(v, euler, l) == 1) return reject("u_n + e is a d-th power mod l", static_cast<std::int64_t>(n));
      ++next;
    }
    std::uint64_t nxt = 0;
    for (std::size_t i = 0; i < k; ++i) nxt = (nxt + mulmod(c[i], state[k - 1 - i], l)) % l;
    state.erase(state.begin());
    state.push_back(nxt);
  }
  if (state != init) return reject("the recurrence mod l does not return to its initial state after P steps");

  // Exact check over Z.
  std::vector<Int> window = spec.initial;
  for (std::uint64_t n = 0; n <= exact_bound; ++n) {
    const Int& u = window.front();
    if (std::binary_search(cert.residues.begin(), cert.residues.end(), n % cert.P)) {
      if (is_perfect_power(u + spec.shift, spec.power)) {
        return reject("u_n + e is an exact d-th power", static_cast<std::int64_t>(n));
      }
    }
    Int nxt = 0;
    for (std::size_t i = 0; i < k; ++i) nxt += spec.coeffs[i] * window[k - 1 - i];
    window.erase(window.begin());
    window.push_back(std::move(nxt));
  }
  return Accept{};
}

}  // namespace hitforge
