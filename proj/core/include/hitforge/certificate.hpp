#pragma once

// The certificate envelope shared by every engine and its canonical JSON
// form: sorted keys, two-space indent, integers at or beyond 2^53 written as
// decimal strings, rationals and polynomials as canonical text.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hitforge/elliptic.hpp"
#include "hitforge/kron.hpp"
#include "hitforge/pb_gate.hpp"
#include "hitforge/recurrence.hpp"
#include "hitforge/torus.hpp"

namespace hitforge {

inline constexpr int kEnvelopeVersion = 1;
inline constexpr std::string_view kToolchain = "hitforge 0.1.0";

enum class CertKind { Torus, Recurrence, Elliptic, KronReport, PBVerdict };

std::string to_string(CertKind k);  // "torus", "recurrence", "elliptic", "kron-report", "pb-verdict"

/// A pb_check verdict together with the cover it speaks about.
struct PBRecord {
  CoverSpec cover;
  PBVerdict verdict;
};

/// Digests of the canonical printings of the inputs.  Which fields are used
/// depends on the kind: torus {covers, base}, recurrence {spec}, elliptic
/// {curve, point, fibers}, kron-report and pb-verdict {covers} (one entry).
struct InputDigests {
  std::vector<std::string> covers;
  std::string base;
  std::string spec;
  std::string curve;
  std::string point;
  std::vector<std::string> fibers;
  bool operator==(const InputDigests&) const = default;
};

/// Wall-clock time is deliberately absent so that reruns are byte-identical.
struct TraceSummary {
  std::uint64_t primes_tried = 0;
  std::vector<std::uint64_t> bad_primes;
  std::vector<std::uint64_t> skipped_primes;
  std::string strategy;
  bool operator==(const TraceSummary&) const = default;
};

TraceSummary summarize(const SearchTrace& t);

using Payload = std::variant<ProgressionCertificate, PowerCertificate, EllCertificate, KronReport, PBRecord>;

struct Envelope {
  int version = kEnvelopeVersion;
  std::string digest_algorithm = "sha256";
  InputDigests inputs;
  Payload payload;
  std::uint64_t seed = 0;
  std::string toolchain{kToolchain};
  TraceSummary trace;

  CertKind kind() const { return static_cast<CertKind>(payload.index()); }
};

std::string canonical_text(const EllipticCurveQ& E);  // "A=0;B=-2"
std::string canonical_text(const PointQ& P);          // "x=3;y=5"

Envelope make_envelope(const ProgressionCertificate& cert, const SearchTrace& trace);
Envelope make_envelope(const PowerCertificate& cert, const SearchTrace& trace);
Envelope make_envelope(const EllCertificate& cert, const SearchTrace& trace);
Envelope make_envelope(const KronReport& report);
Envelope make_envelope(const PBRecord& record);

/// Canonical bytes, newline-terminated.
std::string save(const Envelope& env);

/// Strict inverse of save: unknown or missing fields, wrong types and
/// non-canonical integers raise SchemaError; a version other than
/// kEnvelopeVersion raises UnsupportedVersion.
Envelope load(std::string_view bytes);

}  // namespace hitforge
