#include "hitforge/certificate.hpp"

#include <json.hpp>

#include <initializer_list>
#include <set>

#include "hitforge/digest.hpp"

namespace hitforge {

using json = nlohmann::json;  // std::map-backed, so keys come out sorted

namespace {

constexpr std::uint64_t kSafeInt = std::uint64_t{1} << 53;

json enc_u64(std::uint64_t v) { return v < kSafeInt ? json(v) : json(std::to_string(v)); }

json enc_i64(std::int64_t v) {
  const std::uint64_t mag = v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
  return mag < kSafeInt ? json(v) : json(std::to_string(v));
}

json enc_int(const Int& v) {
  if (abs(v) < Int(static_cast<unsigned long>(kSafeInt))) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

template <class T, class F>
json enc_list(const std::vector<T>& xs, F f) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(f(x));
  return a;
}

json enc_u64s(const std::vector<std::uint64_t>& xs) { return enc_list(xs, enc_u64); }

std::string escape_pointer(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

/// A value plus the JSON pointer it was reached by.
class Node {
 public:
  Node(const json& j, std::string ptr) : j_(j), ptr_(std::move(ptr)) {}

  [[noreturn]] void fail(const std::string& what) const { throw SchemaError(ptr_, what); }
  const std::string& pointer() const { return ptr_; }
  const json& raw() const { return j_; }
  bool is_null() const { return j_.is_null(); }

  /// Requires an object with exactly these keys.
  void keys(std::initializer_list<std::string_view> expected) const {
    if (!j_.is_object()) fail("expected an object");
    std::set<std::string, std::less<>> want(expected.begin(), expected.end());
    for (const auto& [k, v] : j_.items()) {
      if (!want.count(k)) Node(v, ptr_ + "/" + escape_pointer(k)).fail("unknown field");
    }
    for (const auto& k : want) {
      if (!j_.contains(k)) Node(j_, ptr_ + "/" + escape_pointer(k)).fail("missing field");
    }
  }

  Node at(std::string_view key) const {
    if (!j_.is_object()) fail("expected an object");
    auto it = j_.find(std::string(key));
    const std::string p = ptr_ + "/" + escape_pointer(key);
    if (it == j_.end()) Node(j_, p).fail("missing field");
    return Node(*it, p);
  }

  std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }

  Node at(std::size_t i) const { return Node(j_.at(i), ptr_ + "/" + std::to_string(i)); }

  template <class F>
  auto list(F f) const {
    std::vector<decltype(f(std::declval<Node>()))> out;
    const std::size_t n = size();
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(f(at(i)));
    return out;
  }

  std::string str() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

  bool boolean() const {
    if (!j_.is_boolean()) fail("expected a boolean");
    return j_.get<bool>();
  }

  /// Numbers below 2^53 in magnitude, decimal strings at or beyond it.
  Int integer() const {
    if (j_.is_number_unsigned()) {
      const auto v = j_.get<std::uint64_t>();
      if (v >= kSafeInt) fail("integers at or beyond 2^53 must be strings");
      return Int(static_cast<unsigned long>(v));
    }
    if (j_.is_number_integer()) {
      const auto v = j_.get<std::int64_t>();
      if (v <= -static_cast<std::int64_t>(kSafeInt)) fail("integers at or beyond 2^53 must be strings");
      return Int(static_cast<long>(v));
    }
    if (j_.is_string()) {
      const auto s = j_.get<std::string>();
      Int v;
      if (s.empty() || v.set_str(s, 10) != 0 || v.get_str() != s) fail("not a canonical integer");
      if (abs(v) < Int(static_cast<unsigned long>(kSafeInt))) fail("integers below 2^53 must be numbers");
      return v;
    }
    fail("expected an integer");
  }

  std::uint64_t u64() const {
    const Int v = integer();
    if (v < 0 || v > Int(std::to_string(UINT64_MAX))) fail("out of range for an unsigned 64-bit value");
    return std::stoull(v.get_str());
  }

  std::int64_t i64() const {
    const Int v = integer();
    if (v < Int(std::to_string(INT64_MIN)) || v > Int(std::to_string(INT64_MAX))) fail("out of range");
    return std::stoll(v.get_str());
  }

  unsigned u32() const {
    const auto v = u64();
    if (v > UINT32_MAX) fail("out of range");
    return static_cast<unsigned>(v);
  }

  Rat rational() const {
    const auto s = str();
    Rat v;
    try {
      v = parse_rational(s);
    } catch (const InputError&) {
      fail("not a rational number");
    }
    if (to_string(v) != s) fail("rational not in canonical form");
    return v;
  }

  MPolyQ poly() const {
    const auto s = str();
    MPolyQ f;
    try {
      f = parse_poly(s);
    } catch (const Error& e) {
      fail(std::string("bad polynomial: ") + e.what());
    }
    if (f.str() != s) fail("polynomial not in canonical form");
    return f;
  }

  std::vector<std::uint64_t> u64s() const {
    return list([](const Node& n) { return n.u64(); });
  }

 private:
  const json& j_;
  std::string ptr_;
};

// ---- shared pieces ---------------------------------------------------------

FiberMode mode_of(const Node& n) {
  const auto s = n.str();
  if (s == "noroot") return FiberMode::NoRationalPoint;
  if (s == "irred") return FiberMode::IrreducibleFiber;
  n.fail("mode must be noroot or irred");
}

json enc_fibers(const std::vector<std::vector<FiberRecord>>& rows) {
  return enc_list(rows, [](const std::vector<FiberRecord>& row) {
    return enc_list(row, [](const FiberRecord& r) {
      json o;
      o["coeffs"] = enc_u64s(r.coeffs);
      o["factor_degrees"] = enc_list(r.factor_degrees, [](unsigned d) { return json(d); });
      return o;
    });
  });
}

std::vector<std::vector<FiberRecord>> dec_fibers(const Node& n) {
  return n.list([](const Node& row) {
    return row.list([](const Node& r) {
      r.keys({"coeffs", "factor_degrees"});
      FiberRecord rec;
      rec.coeffs = r.at("coeffs").u64s();
      rec.factor_degrees = r.at("factor_degrees").list([](const Node& d) { return d.u32(); });
      return rec;
    });
  });
}

json enc_witness(const AbsIrredWitness& w) {
  json o;
  if (std::holds_alternative<LinearWitness>(w)) {
    o["type"] = "linear";
  } else if (const auto* d = std::get_if<DiscriminantWitness>(&w)) {
    o["type"] = "discriminant";
    o["discriminant"] = d->discriminant.str();
  } else {
    const auto& s = std::get<SpecializationWitness>(w);
    o["type"] = "specialization";
    o["l"] = enc_u64(s.l);
    o["L"] = s.L;
    o["modulus"] = enc_u64s(s.modulus);
    o["point"] = enc_list(s.point, [](const std::pair<Var, std::vector<std::uint64_t>>& p) {
      json e;
      e["var"] = std::string(var_name(p.first));
      e["value"] = enc_u64s(p.second);
      return e;
    });
    o["fiber"] = enc_list(s.fiber, enc_u64s);
  }
  return o;
}

AbsIrredWitness dec_witness(const Node& n) {
  const auto type = n.at("type").str();
  if (type == "linear") {
    n.keys({"type"});
    return LinearWitness{};
  }
  if (type == "discriminant") {
    n.keys({"type", "discriminant"});
    return DiscriminantWitness{n.at("discriminant").poly()};
  }
  if (type == "specialization") {
    n.keys({"type", "l", "L", "modulus", "point", "fiber"});
    SpecializationWitness s;
    s.l = n.at("l").u64();
    s.L = n.at("L").u32();
    s.modulus = n.at("modulus").u64s();
    s.point = n.at("point").list([](const Node& e) {
      e.keys({"var", "value"});
      const auto v = var_from_name(e.at("var").str());
      if (!v) e.at("var").fail("unknown variable");
      return std::make_pair(*v, e.at("value").u64s());
    });
    s.fiber = n.at("fiber").list([](const Node& c) { return c.u64s(); });
    return s;
  }
  n.at("type").fail("unknown witness type");
}

// ---- payloads --------------------------------------------------------------

json enc_payload(const ProgressionCertificate& c) {
  json o;
  o["mode"] = to_string(c.mode);
  o["l"] = enc_u64(c.l);
  o["M"] = enc_u64(c.M);
  o["residues"] = enc_u64s(c.residues);
  o["fibers"] = enc_fibers(c.fibers);
  return o;
}

ProgressionCertificate dec_torus(const Node& n) {
  n.keys({"mode", "l", "M", "residues", "fibers"});
  ProgressionCertificate c;
  c.mode = mode_of(n.at("mode"));
  c.l = n.at("l").u64();
  c.M = n.at("M").u64();
  c.residues = n.at("residues").u64s();
  c.fibers = dec_fibers(n.at("fibers"));
  return c;
}

json enc_payload(const PowerCertificate& c) {
  json o;
  o["l"] = enc_u64(c.l);
  o["P"] = enc_u64(c.P);
  o["residues"] = enc_u64s(c.residues);
  o["values"] = enc_u64s(c.values);
  json s;
  s["coeffs"] = enc_list(c.spec.coeffs, enc_int);
  s["initial"] = enc_list(c.spec.initial, enc_int);
  s["shift"] = enc_int(c.spec.shift);
  s["power"] = c.spec.power;
  o["spec"] = s;
  return o;
}

PowerCertificate dec_recurrence(const Node& n) {
  n.keys({"l", "P", "residues", "values", "spec"});
  PowerCertificate c;
  c.l = n.at("l").u64();
  c.P = n.at("P").u64();
  c.residues = n.at("residues").u64s();
  c.values = n.at("values").u64s();
  const Node s = n.at("spec");
  s.keys({"coeffs", "initial", "shift", "power"});
  auto ints = [](const Node& x) { return x.integer(); };
  try {
    c.spec = make_recurrence(s.at("coeffs").list(ints), s.at("initial").list(ints), s.at("shift").integer(),
                             s.at("power").u32());
  } catch (const InputError& e) {
    s.fail(e.what());
  }
  return c;
}

json enc_payload(const EllCertificate& c) {
  json o;
  o["mode"] = to_string(c.mode);
  o["l"] = enc_u64(c.l);
  o["M"] = enc_u64(c.M);
  o["residues"] = enc_u64s(c.residues);
  o["fibers"] = enc_fibers(c.fibers);
  o["curve"] = {{"A", to_string(c.curve.A)}, {"B", to_string(c.curve.B)}};
  o["point"] = {{"x", to_string(c.point.x)}, {"y", to_string(c.point.y)}};
  o["fiber_polys"] = c.fiber_texts;
  return o;
}

EllCertificate dec_elliptic(const Node& n) {
  n.keys({"mode", "l", "M", "residues", "fibers", "curve", "point", "fiber_polys"});
  EllCertificate c;
  c.mode = mode_of(n.at("mode"));
  c.l = n.at("l").u64();
  c.M = n.at("M").u64();
  c.residues = n.at("residues").u64s();
  c.fibers = dec_fibers(n.at("fibers"));
  const Node E = n.at("curve");
  E.keys({"A", "B"});
  c.curve = EllipticCurveQ{E.at("A").rational(), E.at("B").rational()};
  const Node P = n.at("point");
  P.keys({"x", "y"});
  c.point = rational_point(P.at("x").rational(), P.at("y").rational());
  c.fiber_texts = n.at("fiber_polys").list([](const Node& f) { return f.poly().str(); });
  return c;
}

json enc_verdict(const std::variant<AbsIrredWitness, Unknown>& v) {
  json o;
  if (const auto* u = std::get_if<Unknown>(&v)) {
    o["status"] = "unknown";
    o["reason"] = u->reason;
  } else {
    o["status"] = "certified";
    o["witness"] = enc_witness(std::get<AbsIrredWitness>(v));
  }
  return o;
}

std::variant<AbsIrredWitness, Unknown> dec_verdict(const Node& n) {
  const auto status = n.at("status").str();
  if (status == "unknown") {
    n.keys({"status", "reason"});
    return Unknown{n.at("reason").str()};
  }
  if (status == "certified") {
    n.keys({"status", "witness"});
    return dec_witness(n.at("witness"));
  }
  n.at("status").fail("status must be certified or unknown");
}

json enc_payload(const KronReport& r) {
  json o;
  o["poly"] = r.f.str();
  o["m_lo"] = r.m_lo;
  o["m_hi"] = r.m_hi;
  o["verdicts"] = enc_list(r.verdicts, [](const KronVerdict& v) {
    json e;
    e["m"] = v.m;
    e["substituted"] = v.substituted.str();
    e["collapsed"] = v.collapsed;
    e["verdict"] = enc_verdict(v.verdict);
    return e;
  });
  if (!r.subgroups) {
    o["subgroups"] = nullptr;
  } else {
    const auto& s = *r.subgroups;
    json g;
    g["l"] = enc_u64(s.l);
    g["orders"] = s.orders;
    g["skipped_orders"] = s.skipped_orders;
    g["flagged"] = enc_list(s.flagged, [](const ExceptionalVector& x) {
      json e;
      e["a"] = enc_list(x.a, enc_i64);
      e["reason"] = x.reason;
      e["order"] = x.order;
      e["theta"] = enc_u64s(x.theta);
      return e;
    });
    o["subgroups"] = g;
  }
  return o;
}

KronReport dec_kron(const Node& n) {
  n.keys({"poly", "m_lo", "m_hi", "verdicts", "subgroups"});
  KronReport r;
  r.f = n.at("poly").poly();
  r.m_lo = n.at("m_lo").u32();
  r.m_hi = n.at("m_hi").u32();
  r.verdicts = n.at("verdicts").list([](const Node& e) {
    e.keys({"m", "substituted", "collapsed", "verdict"});
    KronVerdict v;
    v.m = e.at("m").u32();
    v.substituted = e.at("substituted").poly();
    v.collapsed = e.at("collapsed").boolean();
    v.verdict = dec_verdict(e.at("verdict"));
    return v;
  });
  const Node g = n.at("subgroups");
  if (!g.is_null()) {
    g.keys({"l", "orders", "skipped_orders", "flagged"});
    SubgroupScan s;
    s.l = g.at("l").u64();
    auto u32 = [](const Node& x) { return x.u32(); };
    s.orders = g.at("orders").list(u32);
    s.skipped_orders = g.at("skipped_orders").list(u32);
    s.flagged = g.at("flagged").list([](const Node& e) {
      e.keys({"a", "reason", "order", "theta"});
      ExceptionalVector x;
      x.a = e.at("a").list([](const Node& v) { return v.i64(); });
      x.reason = e.at("reason").str();
      x.order = e.at("order").u32();
      x.theta = e.at("theta").u64s();
      return x;
    });
    r.subgroups = std::move(s);
  }
  return r;
}

json enc_payload(const PBRecord& rec) {
  json o;
  o["cover"] = rec.cover.f.str();
  json v;
  if (const auto* pb = std::get_if<CertifiedPB>(&rec.verdict)) {
    v["status"] = "pb";
    v["witness"] = enc_witness(pb->witness);
  } else if (const auto* np = std::get_if<CertifiedNotPB>(&rec.verdict)) {
    v["status"] = "not_pb";
    json e;
    if (const auto* f = std::get_if<ExplicitFactor>(&np->evidence)) {
      e["type"] = "explicit_factor";
      e["m"] = f->m;
      e["factor"] = f->factor.str();
    } else {
      const auto& s = std::get<SquareDiscriminant>(np->evidence);
      e["type"] = "square_discriminant";
      e["discriminant"] = s.discriminant.str();
      e["constant"] = to_string(s.constant);
      e["root"] = s.root.str();
    }
    v["evidence"] = e;
  } else {
    v["status"] = "unknown";
    v["reason"] = std::get<Unknown>(rec.verdict).reason;
  }
  o["verdict"] = v;
  return o;
}

PBRecord dec_pb(const Node& n) {
  n.keys({"cover", "verdict"});
  PBRecord rec;
  try {
    rec.cover = make_cover(n.at("cover").poly());
  } catch (const InputError& e) {
    n.at("cover").fail(e.what());
  }
  const Node v = n.at("verdict");
  const auto status = v.at("status").str();
  if (status == "pb") {
    v.keys({"status", "witness"});
    rec.verdict = CertifiedPB{dec_witness(v.at("witness"))};
  } else if (status == "not_pb") {
    v.keys({"status", "evidence"});
    const Node e = v.at("evidence");
    const auto type = e.at("type").str();
    if (type == "explicit_factor") {
      e.keys({"type", "m", "factor"});
      rec.verdict = CertifiedNotPB{ExplicitFactor{e.at("m").u32(), e.at("factor").poly()}};
    } else if (type == "square_discriminant") {
      e.keys({"type", "discriminant", "constant", "root"});
      rec.verdict = CertifiedNotPB{
          SquareDiscriminant{e.at("discriminant").poly(), e.at("constant").rational(), e.at("root").poly()}};
    } else {
      e.at("type").fail("unknown evidence type");
    }
  } else if (status == "unknown") {
    v.keys({"status", "reason"});
    rec.verdict = Unknown{v.at("reason").str()};
  } else {
    v.at("status").fail("status must be pb, not_pb or unknown");
  }
  return rec;
}

json enc_inputs(const Envelope& env) {
  const auto& in = env.inputs;
  json o = json::object();
  switch (env.kind()) {
    case CertKind::Torus:
      o["covers"] = in.covers;
      o["base"] = in.base;
      break;
    case CertKind::Recurrence:
      o["spec"] = in.spec;
      break;
    case CertKind::Elliptic:
      o["curve"] = in.curve;
      o["point"] = in.point;
      o["fibers"] = in.fibers;
      break;
    case CertKind::KronReport:
    case CertKind::PBVerdict:
      o["covers"] = in.covers;
      break;
  }
  return o;
}

InputDigests dec_inputs(const Node& n, CertKind kind) {
  InputDigests in;
  auto strs = [](const Node& x) { return x.list([](const Node& s) { return s.str(); }); };
  switch (kind) {
    case CertKind::Torus:
      n.keys({"covers", "base"});
      in.covers = strs(n.at("covers"));
      in.base = n.at("base").str();
      break;
    case CertKind::Recurrence:
      n.keys({"spec"});
      in.spec = n.at("spec").str();
      break;
    case CertKind::Elliptic:
      n.keys({"curve", "point", "fibers"});
      in.curve = n.at("curve").str();
      in.point = n.at("point").str();
      in.fibers = strs(n.at("fibers"));
      break;
    case CertKind::KronReport:
    case CertKind::PBVerdict:
      n.keys({"covers"});
      in.covers = strs(n.at("covers"));
      if (in.covers.size() != 1) n.at("covers").fail("exactly one digest expected");
      break;
  }
  return in;
}

CertKind kind_of(const Node& n) {
  const auto s = n.str();
  for (auto k : {CertKind::Torus, CertKind::Recurrence, CertKind::Elliptic, CertKind::KronReport,
                 CertKind::PBVerdict}) {
    if (to_string(k) == s) return k;
  }
  n.fail("unknown kind");
}

}  // namespace

std::string to_string(CertKind k) {
  switch (k) {
    case CertKind::Torus: return "torus";
    case CertKind::Recurrence: return "recurrence";
    case CertKind::Elliptic: return "elliptic";
    case CertKind::KronReport: return "kron-report";
    case CertKind::PBVerdict: return "pb-verdict";
  }
  return "?";
}

TraceSummary summarize(const SearchTrace& t) {
  return TraceSummary{t.primes_tried, t.bad_primes, t.skipped_primes, t.strategy};
}

std::string canonical_text(const EllipticCurveQ& E) { return "A=" + to_string(E.A) + ";B=" + to_string(E.B); }

std::string canonical_text(const PointQ& P) {
  if (P.infinity) return "O";
  return "x=" + to_string(P.x) + ";y=" + to_string(P.y);
}

Envelope make_envelope(const ProgressionCertificate& cert, const SearchTrace& trace) {
  Envelope env;
  env.payload = cert;
  env.seed = cert.seed;
  env.trace = summarize(trace);
  env.inputs.covers = cert.cover_digests;
  env.inputs.base = cert.base_digest;
  return env;
}

Envelope make_envelope(const PowerCertificate& cert, const SearchTrace& trace) {
  Envelope env;
  env.payload = cert;
  env.trace = summarize(trace);
  env.inputs.spec = cert.spec_digest;
  return env;
}

Envelope make_envelope(const EllCertificate& cert, const SearchTrace& trace) {
  Envelope env;
  env.payload = cert;
  env.seed = cert.seed;
  env.trace = summarize(trace);
  env.inputs.curve = sha256_hex(canonical_text(cert.curve));
  env.inputs.point = sha256_hex(canonical_text(cert.point));
  for (const auto& t : cert.fiber_texts) env.inputs.fibers.push_back(poly_digest(parse_poly(t)));
  return env;
}

Envelope make_envelope(const KronReport& report) {
  Envelope env;
  env.payload = report;
  env.inputs.covers = {report.f_digest};
  env.trace.strategy = "kronecker";
  return env;
}

Envelope make_envelope(const PBRecord& record) {
  Envelope env;
  env.payload = record;
  env.inputs.covers = {poly_digest(record.cover.f)};
  env.trace.strategy = "pb-gate";
  return env;
}

std::string save(const Envelope& env) {
  json o;
  o["version"] = env.version;
  o["kind"] = to_string(env.kind());
  o["digest_algorithm"] = env.digest_algorithm;
  o["inputs"] = enc_inputs(env);
  o["payload"] = std::visit([](const auto& p) { return enc_payload(p); }, env.payload);
  o["seed"] = enc_u64(env.seed);
  o["toolchain"] = env.toolchain;
  json t;
  t["primes_tried"] = enc_u64(env.trace.primes_tried);
  t["bad_primes"] = enc_u64s(env.trace.bad_primes);
  t["skipped_primes"] = enc_u64s(env.trace.skipped_primes);
  t["strategy"] = env.trace.strategy;
  o["trace"] = t;
  return o.dump(2) + "\n";
}

Envelope load(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
  const Node root(doc, "");
  if (!doc.is_object()) root.fail("expected an object");
  // The version decides the schema, so it is checked before anything else.
  const Node ver = root.at("version");
  if (!ver.raw().is_number_integer() || ver.raw().get<std::int64_t>() != kEnvelopeVersion) {
    throw UnsupportedVersion(ver.pointer(), "unsupported version " + ver.raw().dump());
  }
  root.keys({"version", "kind", "digest_algorithm", "inputs", "payload", "seed", "toolchain", "trace"});

  Envelope env;
  const CertKind kind = kind_of(root.at("kind"));
  env.digest_algorithm = root.at("digest_algorithm").str();
  if (env.digest_algorithm != "sha256") root.at("digest_algorithm").fail("only sha256 is supported");
  env.inputs = dec_inputs(root.at("inputs"), kind);
  env.seed = root.at("seed").u64();
  env.toolchain = root.at("toolchain").str();
  const Node t = root.at("trace");
  t.keys({"primes_tried", "bad_primes", "skipped_primes", "strategy"});
  env.trace.primes_tried = t.at("primes_tried").u64();
  env.trace.bad_primes = t.at("bad_primes").u64s();
  env.trace.skipped_primes = t.at("skipped_primes").u64s();
  env.trace.strategy = t.at("strategy").str();

  const Node p = root.at("payload");
  switch (kind) {
    case CertKind::Torus: {
      auto c = dec_torus(p);
      c.cover_digests = env.inputs.covers;
      c.base_digest = env.inputs.base;
      c.seed = env.seed;
      env.payload = std::move(c);
      break;
    }
    case CertKind::Recurrence: {
      auto c = dec_recurrence(p);
      c.spec_digest = env.inputs.spec;
      env.payload = std::move(c);
      break;
    }
    case CertKind::Elliptic: {
      auto c = dec_elliptic(p);
      c.seed = env.seed;
      env.payload = std::move(c);
      break;
    }
    case CertKind::KronReport: {
      auto r = dec_kron(p);
      r.f_digest = env.inputs.covers.front();
      env.payload = std::move(r);
      break;
    }
    case CertKind::PBVerdict:
      env.payload = dec_pb(p);
      break;
  }
  return env;
}

}  // namespace hitforge
