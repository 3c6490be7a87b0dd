#pragma once

// Verifier entry point for certificate envelopes.  Lives in hitforge_verify
// and reaches only verifier code, so a build without the search library can
// still check every certificate.

#include <cstdint>
#include <optional>
#include <vector>

#include "hitforge/certificate.hpp"

namespace hitforge {

/// Inputs supplied at verification time.  Torus envelopes carry only digests,
/// so they need covers and base; the other kinds embed their inputs.
struct VerifyInputs {
  std::vector<CoverSpec> covers;
  std::optional<BasePoint> base;
  std::optional<std::uint64_t> exact_bound;  // per-kind default when unset
};

/// 40 for torus and recurrence, 8 for elliptic, 0 otherwise.
std::uint64_t default_exact_bound(CertKind k);

/// Throws DigestMismatch when supplied inputs hash differently from the
/// envelope's, InputError when a torus envelope comes without them.
/// Embedded inputs that disagree with their recorded digests are a Reject.
VerifyResult verify_envelope(const Envelope& env, const VerifyInputs& in = {});

}  // namespace hitforge
