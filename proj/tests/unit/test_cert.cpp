#include "doctest.h"
#include "hitforge/cert_verify.hpp"
#include "hitforge/certificate.hpp"

using namespace hitforge;

namespace {

CoverSpec C(std::string_view s) { return make_cover(parse_poly(s)); }

BasePoint B(std::vector<long> xi) {
  std::vector<Rat> q;
  for (long x : xi) q.emplace_back(x);
  return make_base_point(q);
}

Envelope torus_envelope() {
  ProgressionConfig cfg;
  cfg.min_prime = 7;
  auto r = find_progression({C("y^2 - x1 - x2 - 1")}, B({2, 3}), cfg);
  REQUIRE(std::holds_alternative<ProgressionFound>(r));
  const auto& f = std::get<ProgressionFound>(r);
  return make_envelope(f.cert, f.trace);
}

Envelope rec_envelope() {
  auto r = find_power_free_progression(rec_from_quadratic(4, 5, 2, 4, 1, 2), {});
  REQUIRE(std::holds_alternative<PowerFound>(r));
  const auto& f = std::get<PowerFound>(r);
  return make_envelope(f.cert, f.trace);
}

Envelope ell_envelope() {
  const auto E = make_curve(0, -2);
  auto r = ec_find_progression(E, rational_point(3, 5), {make_fiber(parse_poly("T^2 - X"))}, {});
  REQUIRE(std::holds_alternative<EllFound>(r));
  const auto& f = std::get<EllFound>(r);
  return make_envelope(f.cert, f.trace);
}

Envelope kron_envelope() {
  const auto c = C("y^2 - x1 - x2 - 1");
  KronReport rep = kron_scan(c, 2, 6);
  rep.subgroups = subgroup_scan(c.f, {{1, 1}, {1, 0}, {1, 2}}, {2, 3});
  return make_envelope(rep);
}

Envelope pb_envelope(std::string_view f) {
  const auto c = C(f);
  return make_envelope(PBRecord{c, pb_check(c)});
}

std::vector<Envelope> corpus() {
  return {torus_envelope(), rec_envelope(), ell_envelope(), kron_envelope(),
          pb_envelope("y^2 - x1"), pb_envelope("y^2 - x1 - 1"), pb_envelope("y^3 - x1 - x2 - 1")};
}

VerifyInputs torus_inputs(std::vector<long> xi) {
  VerifyInputs in;
  in.covers = {C("y^2 - x1 - x2 - 1")};
  in.base = B(std::move(xi));
  return in;
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

std::string schema_pointer(const std::string& bytes) {
  try {
    load(bytes);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<loaded>";
}

}  // namespace

TEST_CASE("envelopes round-trip byte for byte and verify") {
  for (const auto& env : corpus()) {
    CAPTURE(to_string(env.kind()));
    const std::string bytes = save(env);
    CHECK(bytes.back() == '\n');
    const Envelope back = load(bytes);
    CHECK(back.kind() == env.kind());
    CHECK(back.inputs == env.inputs);
    CHECK(back.trace == env.trace);
    CHECK(save(back) == bytes);
    VerifyInputs in;
    if (env.kind() == CertKind::Torus) in = torus_inputs({2, 3});
    CHECK(accepted(verify_envelope(back, in)));
  }
}

TEST_CASE("payloads survive loading unchanged") {
  const auto t = torus_envelope();
  CHECK(std::get<ProgressionCertificate>(load(save(t)).payload) == std::get<ProgressionCertificate>(t.payload));
  const auto r = rec_envelope();
  CHECK(std::get<PowerCertificate>(load(save(r)).payload) == std::get<PowerCertificate>(r.payload));
  const auto e = ell_envelope();
  CHECK(std::get<EllCertificate>(load(save(e)).payload) == std::get<EllCertificate>(e.payload));
}

TEST_CASE("keys are sorted and there is no timing field") {
  const std::string bytes = save(torus_envelope());
  const std::vector<std::string> order{"\"digest_algorithm\"", "\"inputs\"",   "\"kind\"",  "\"payload\"",
                                       "\"seed\"",             "\"toolchain\"", "\"trace\"", "\"version\""};
  std::size_t last = 0;
  for (const auto& k : order) {
    const auto pos = bytes.find("\n  " + k);
    REQUIRE(pos != std::string::npos);
    CHECK(pos > last);
    last = pos;
  }
  CHECK(bytes.find("time") == std::string::npos);
}

TEST_CASE("hand-derived torus certificate verifies through the envelope") {
  ProgressionCertificate cert;
  cert.mode = FiberMode::NoRationalPoint;
  cert.l = 7;
  cert.M = 6;
  cert.residues = {1, 5};
  cert.fibers = {{FiberRecord{{1, 0, 1}, {2}}}, {FiberRecord{{4, 0, 1}, {2}}}};
  cert.cover_digests = {digest_of(C("y^2 - x1 - x2 - 1"))};
  cert.base_digest = digest_of(B({2, 3}));
  const Envelope env = load(save(make_envelope(cert, SearchTrace{})));

  CHECK(accepted(verify_envelope(env, torus_inputs({2, 3}))));
  CHECK_THROWS_AS(verify_envelope(env, torus_inputs({2, 5})), DigestMismatch);
  VerifyInputs other = torus_inputs({2, 3});
  other.covers = {C("y^2 - x1 - x2 - 2")};
  CHECK_THROWS_AS(verify_envelope(env, other), DigestMismatch);
  CHECK_THROWS_AS(verify_envelope(env, {}), InputError);

  // 5 = 0b101 with its low bit flipped is 4, where 2^4 + 3^4 + 1 = 98 = 0 mod 7.
  auto flipped = env;
  std::get<ProgressionCertificate>(flipped.payload).residues = {1, 4};
  const auto res = verify_envelope(load(save(flipped)), torus_inputs({2, 3}));
  REQUIRE_FALSE(accepted(res));
  CHECK(std::get<Reject>(res).witness == 4);
}

TEST_CASE("strict schema") {
  const std::string good = save(torus_envelope());

  SUBCASE("truncated") { CHECK_THROWS_AS(load(good.substr(0, good.size() / 2)), SchemaError); }
  SUBCASE("empty") { CHECK_THROWS_AS(load(""), SchemaError); }
  SUBCASE("version 999") {
    const auto bad = replace_once(good, "\"version\": 1", "\"version\": 999");
    CHECK_THROWS_AS(load(bad), UnsupportedVersion);
    CHECK(schema_pointer(bad) == "/version");
  }
  SUBCASE("unknown top-level field") {
    CHECK(schema_pointer(replace_once(good, "{\n", "{\n  \"extra\": 0,\n")) == "/extra");
  }
  SUBCASE("unknown payload field") {
    CHECK(schema_pointer(replace_once(good, "\"payload\": {\n", "\"payload\": {\n    \"note\": \"x\",\n")) ==
          "/payload/note");
  }
  SUBCASE("missing field") {
    CHECK(schema_pointer(replace_once(good, "\"mode\": \"noroot\",", "")) == "/payload/mode");
  }
  SUBCASE("wrong type") {
    CHECK(schema_pointer(replace_once(good, "\"l\": 7", "\"l\": \"seven\"")) == "/payload/l");
  }
  SUBCASE("small integer written as a string") {
    CHECK(schema_pointer(replace_once(good, "\"l\": 7", "\"l\": \"7\"")) == "/payload/l");
  }
  SUBCASE("fractional number") {
    CHECK(schema_pointer(replace_once(good, "\"l\": 7", "\"l\": 7.0")) == "/payload/l");
  }
  SUBCASE("unknown kind") {
    CHECK(schema_pointer(replace_once(good, "\"kind\": \"torus\"", "\"kind\": \"torus2\"")) == "/kind");
  }
  SUBCASE("non-canonical polynomial") {
    const std::string k = save(kron_envelope());
    CHECK(schema_pointer(replace_once(k, "\"poly\": \"y^2 - x1 - x2 - 1\"", "\"poly\": \"y^2-x1-x2-1\"")) ==
          "/payload/poly");
  }
}

TEST_CASE("integers from 2^53 on are strings") {
  PowerCertificate cert;
  cert.spec = make_recurrence({Int("1152921504606846976")}, {Int(1)}, Int("-9007199254740992"), 2);
  cert.spec_digest = digest_of(cert.spec);
  cert.l = 3;
  cert.P = 1;
  const std::string bytes = save(make_envelope(cert, SearchTrace{}));
  CHECK(bytes.find("\"1152921504606846976\"") != std::string::npos);
  CHECK(bytes.find("\"-9007199254740992\"") != std::string::npos);
  CHECK(std::get<PowerCertificate>(load(bytes).payload).spec == cert.spec);
  CHECK(save(load(bytes)) == bytes);

  // 2^53 - 1 is still a plain number.
  cert.spec.shift = Int("9007199254740991");
  const std::string edge = save(make_envelope(cert, SearchTrace{}));
  CHECK(edge.find("\"shift\": 9007199254740991") != std::string::npos);
  CHECK_THROWS_AS(load(replace_once(edge, "\"shift\": 9007199254740991", "\"shift\": 9007199254740992")),
                  SchemaError);
}

TEST_CASE("tampered embedded inputs are rejected") {
  SUBCASE("recurrence shift") {
    const std::string bytes = save(rec_envelope());
    const auto res = verify_envelope(load(replace_once(bytes, "\"shift\": 1", "\"shift\": 2")));
    CHECK_FALSE(accepted(res));
  }
  SUBCASE("elliptic point") {
    const std::string bytes = save(ell_envelope());
    const auto res = verify_envelope(load(replace_once(bytes, "\"x\": \"3\"", "\"x\": \"4\"")));
    CHECK_FALSE(accepted(res));
  }
  SUBCASE("pb verdict on another cover") {
    const std::string bytes = save(pb_envelope("y^2 - x1 - 1"));
    const auto res = verify_envelope(load(replace_once(bytes, "\"cover\": \"y^2 - x1 - 1\"", "\"cover\": \"y^2 - x1\"")));
    CHECK_FALSE(accepted(res));
  }
  SUBCASE("kron verdict degree") {
    const std::string bytes = save(kron_envelope());
    const auto res = verify_envelope(load(replace_once(bytes, "\"m\": 3", "\"m\": 4")));
    CHECK_FALSE(accepted(res));
  }
}

TEST_CASE("searches are deterministic byte for byte") {
  CHECK(save(torus_envelope()) == save(torus_envelope()));
  CHECK(save(rec_envelope()) == save(rec_envelope()));
  CHECK(save(ell_envelope()) == save(ell_envelope()));
  CHECK(save(kron_envelope()) == save(kron_envelope()));
}
