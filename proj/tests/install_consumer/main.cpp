#include <iostream>

#include "hitforge/cert_verify.hpp"

int main() {
  using namespace hitforge;
  const CoverSpec c = make_cover(parse_poly("y^2 - x1 - x2 - 1"));
  const BasePoint b = make_base_point({Rat(2), Rat(3)});
  ProgressionCertificate cert;
  cert.l = 7;
  cert.M = 6;
  cert.residues = {1, 5};
  cert.fibers = {{FiberRecord{{1, 0, 1}, {2}}}, {FiberRecord{{4, 0, 1}, {2}}}};
  cert.cover_digests = {digest_of(c)};
  cert.base_digest = digest_of(b);
  const Envelope env = load(save(make_envelope(cert, SearchTrace{})));
  VerifyInputs in;
  in.covers = {c};
  in.base = b;
  const bool ok = accepted(verify_envelope(env, in));
  std::cout << (ok ? "Accept" : "Reject") << "\n";
  return ok ? 0 : 1;
}
