#include <algorithm>
#include <numeric>

#include "hitforge/errors.hpp"
#include "hitforge/parallel.hpp"
#include "hitforge/recurrence.hpp"

namespace hitforge {

namespace {

struct ReducedRec {
  std::vector<std::uint64_t> coeffs, initial;
  std::uint64_t shift = 0;
};

ReducedRec reduce(const RecurrenceSpec& spec, std::uint64_t l) {
  ReducedRec r;
  for (const auto& c : spec.coeffs) r.coeffs.push_back(mod_of(c, l));
  for (const auto& u : spec.initial) r.initial.push_back(mod_of(u, l));
  r.shift = mod_of(spec.shift, l);
  return r;
}

// Advances the window (u_n..u_{n+k-1}) by one step in place.
void step(const ReducedRec& r, std::vector<std::uint64_t>& window, std::uint64_t l) {
  const std::size_t k = window.size();
  std::uint64_t next = 0;
  for (std::size_t i = 0; i < k; ++i) next = (next + mulmod(r.coeffs[i], window[k - 1 - i], l)) % l;
  std::rotate(window.begin(), window.begin() + 1, window.end());
  window.back() = next;
}

}  // namespace

std::variant<PowerClasses, BadPrime> rec_mod_scan(const RecurrenceSpec& spec, std::uint64_t l,
                                                  std::uint64_t max_period) {
  if (l < 2 || !is_prime(l)) throw PreconditionFailed("rec_mod_scan needs a prime l");
  if (mod_of(spec.coeffs.back(), l) == 0) return BadPrime{"l divides the last recurrence coefficient"};
  const ReducedRec r = reduce(spec, l);
  const std::uint64_t g = std::gcd<std::uint64_t>(spec.power, l - 1);
  const std::uint64_t euler = (l - 1) / g;
  PowerClasses out;
  std::vector<std::uint64_t> window = r.initial;
  for (std::uint64_t n = 0;; ++n) {
    if (n >= max_period) {
      throw BoundExceeded("period mod " + std::to_string(l) + " exceeds " + std::to_string(max_period));
    }
    const std::uint64_t v = (window[0] + r.shift) % l;
    if (g > 1 && v != 0 && powmod(v, euler, l) != 1) out.residues.push_back(n);
    step(r, window, l);
    if (window == r.initial) {
      out.P = n + 1;
      return out;
    }
  }
}

namespace {

struct RecOutcome {
  enum Kind { Bad, Skipped, Empty, Hit } kind = Empty;
  PowerClasses classes;
  std::string note;
};

RecOutcome examine(const RecurrenceSpec& spec, std::uint64_t l, const RecConfig& cfg) {
  RecOutcome o;
  try {
    auto r = rec_mod_scan(spec, l, cfg.max_period);
    if (auto* bad = std::get_if<BadPrime>(&r)) {
      o.kind = RecOutcome::Bad;
      o.note = bad->reason;
      return o;
    }
    o.classes = std::move(std::get<PowerClasses>(r));
    o.kind = o.classes.residues.empty() ? RecOutcome::Empty : RecOutcome::Hit;
  } catch (const BoundExceeded& e) {
    o.kind = RecOutcome::Skipped;
    o.note = e.what();
  }
  return o;
}

std::string log_line(std::uint64_t l, const RecOutcome& o) {
  std::string s = "l=" + std::to_string(l) + " ";
  switch (o.kind) {
    case RecOutcome::Bad: return s + "bad: " + o.note;
    case RecOutcome::Skipped: return s + "skipped: " + o.note;
    case RecOutcome::Empty:
    case RecOutcome::Hit:
      return s + "P=" + std::to_string(o.classes.P) + " good=" + std::to_string(o.classes.residues.size());
  }
  return s;
}

}  // namespace

std::variant<PowerFound, Exhausted> find_power_free_progression(const RecurrenceSpec& spec, const RecConfig& cfg) {
  const std::uint64_t d = spec.power;
  std::vector<std::uint64_t> preferred, others;
  for (std::uint64_t l : primes_between(std::max<std::uint64_t>(cfg.min_prime, 3), cfg.max_prime)) {
    const std::uint64_t g = std::gcd(d, l - 1);
    if (g == d) {
      preferred.push_back(l);
    } else if (g > 1) {
      others.push_back(l);
    }
  }
  std::vector<std::uint64_t> primes = preferred;
  primes.insert(primes.end(), others.begin(), others.end());

  const bool degenerate = is_degenerate(spec);
  SearchTrace trace;
  trace.strategy = "power-residue";
  if (degenerate) trace.log.push_back("warning: degenerate recurrence; the search may not terminate");
  auto record = [&](std::uint64_t l, const RecOutcome& o) {
    ++trace.primes_tried;
    if (o.kind == RecOutcome::Bad) trace.bad_primes.push_back(l);
    if (o.kind == RecOutcome::Skipped) trace.skipped_primes.push_back(l);
    trace.log.push_back(log_line(l, o));
  };
  const auto hit = first_in_order<std::uint64_t, RecOutcome>(
      primes, cfg.jobs, [&](const std::uint64_t& l) { return examine(spec, l, cfg); },
      [](const RecOutcome& o) { return o.kind == RecOutcome::Hit; },
      [&](std::size_t i, const RecOutcome& o) { record(primes[i], o); });
  if (!hit) return Exhausted{std::move(trace)};
  const std::uint64_t l = primes[hit->index];
  record(l, hit->result);

  PowerCertificate cert;
  cert.l = l;
  cert.P = hit->result.classes.P;
  const auto& all = hit->result.classes.residues;
  cert.residues.assign(all.begin(), all.begin() + std::min(all.size(), cfg.max_residues));
  cert.spec = spec;
  cert.spec_digest = digest_of(spec);
  const ReducedRec r = reduce(spec, l);
  std::vector<std::uint64_t> window = r.initial;
  std::size_t next = 0;
  for (std::uint64_t n = 0; next < cert.residues.size(); ++n) {
    if (n == cert.residues[next]) {
      cert.values.push_back((window[0] + r.shift) % l);
      ++next;
    }
    step(r, window, l);
  }
  return PowerFound{std::move(cert), std::move(trace), degenerate};
}

}  // namespace hitforge
