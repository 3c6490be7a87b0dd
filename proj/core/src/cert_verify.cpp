#include "hitforge/cert_verify.hpp"

#include "hitforge/digest.hpp"

namespace hitforge {

namespace {

VerifyResult verify_torus(const Envelope& env, const ProgressionCertificate& cert, const VerifyInputs& in,
                          std::uint64_t bound) {
  if (in.covers.empty() || !in.base) throw InputError("torus certificates need the covers and the base point");
  if (in.covers.size() != env.inputs.covers.size()) {
    throw DigestMismatch("certificate lists " + std::to_string(env.inputs.covers.size()) + " covers, " +
                         std::to_string(in.covers.size()) + " supplied");
  }
  for (std::size_t i = 0; i < in.covers.size(); ++i) {
    if (digest_of(in.covers[i]) != env.inputs.covers[i]) {
      throw DigestMismatch("cover " + std::to_string(i) + " (" + in.covers[i].f.str() + ") does not match");
    }
  }
  if (digest_of(*in.base) != env.inputs.base) {
    throw DigestMismatch("base point " + canonical_text(*in.base) + " does not match");
  }
  return verify_certificate(cert, in.covers, *in.base, bound);
}

VerifyResult verify_rec(const Envelope& env, const PowerCertificate& cert, std::uint64_t bound) {
  if (digest_of(cert.spec) != env.inputs.spec) return Reject{"recurrence does not match its digest", std::nullopt};
  return verify_power_certificate(cert, cert.spec, bound);
}

VerifyResult verify_ell(const Envelope& env, const EllCertificate& cert, std::uint64_t bound) {
  if (sha256_hex(canonical_text(cert.curve)) != env.inputs.curve) return Reject{"curve digest mismatch", {}};
  if (sha256_hex(canonical_text(cert.point)) != env.inputs.point) return Reject{"point digest mismatch", {}};
  if (cert.fiber_texts.size() != env.inputs.fibers.size()) return Reject{"fiber digest count mismatch", {}};
  std::vector<FiberSpec> fibers;
  try {
    for (std::size_t i = 0; i < cert.fiber_texts.size(); ++i) {
      FiberSpec fb = make_fiber(parse_poly(cert.fiber_texts[i]));
      if (poly_digest(fb.f) != env.inputs.fibers[i]) return Reject{"fiber digest mismatch", {}};
      fibers.push_back(std::move(fb));
    }
    make_curve(cert.curve.A, cert.curve.B);
  } catch (const InputError& e) {
    return Reject{std::string("embedded input rejected: ") + e.what(), {}};
  }
  return ec_verify(cert, cert.curve, cert.point, fibers, bound);
}

VerifyResult from_check(const std::optional<std::string>& why) {
  if (why) return Reject{*why, std::nullopt};
  return Accept{};
}

}  // namespace

std::uint64_t default_exact_bound(CertKind k) {
  switch (k) {
    case CertKind::Torus:
    case CertKind::Recurrence: return 40;
    case CertKind::Elliptic: return 8;
    default: return 0;
  }
}

VerifyResult verify_envelope(const Envelope& env, const VerifyInputs& in) {
  if (env.version != kEnvelopeVersion) throw UnsupportedVersion("/version", "unsupported version");
  if (env.digest_algorithm != "sha256") throw SchemaError("/digest_algorithm", "only sha256 is supported");
  const std::uint64_t bound = in.exact_bound.value_or(default_exact_bound(env.kind()));
  switch (env.kind()) {
    case CertKind::Torus:
      return verify_torus(env, std::get<ProgressionCertificate>(env.payload), in, bound);
    case CertKind::Recurrence:
      return verify_rec(env, std::get<PowerCertificate>(env.payload), bound);
    case CertKind::Elliptic:
      return verify_ell(env, std::get<EllCertificate>(env.payload), bound);
    case CertKind::KronReport: {
      const auto& r = std::get<KronReport>(env.payload);
      if (env.inputs.covers.size() != 1 || env.inputs.covers[0] != poly_digest(r.f)) {
        return Reject{"polynomial digest mismatch", std::nullopt};
      }
      return from_check(check_kron_report(r));
    }
    case CertKind::PBVerdict: {
      const auto& rec = std::get<PBRecord>(env.payload);
      if (env.inputs.covers.size() != 1 || env.inputs.covers[0] != poly_digest(rec.cover.f)) {
        return Reject{"cover digest mismatch", std::nullopt};
      }
      return from_check(check_pb_verdict(rec.cover, rec.verdict));
    }
  }
  return Reject{"unknown certificate kind", std::nullopt};
}

}  // namespace hitforge
