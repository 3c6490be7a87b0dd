#include "cli_util.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace hitforge::cli {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  for (const auto& s : out) {
    if (s.empty()) throw InputError("empty entry in list '" + text + "'");
  }
  return out;
}

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    out += line;
    out += ' ';
  }
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty()) {
    std::cout << bytes << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << bytes;
  if (!out) throw InputError("write failed for " + path);
}

MPolyQ read_poly_file(const std::string& path) {
  const std::string text = strip_comments(read_file(path));
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw InputError(path + " holds no polynomial");
  return parse_poly(text);
}

std::vector<CoverSpec> read_covers(const std::vector<std::string>& paths) {
  std::vector<CoverSpec> covers;
  for (const auto& p : paths) covers.push_back(make_cover(read_poly_file(p)));
  return covers;
}

std::vector<Rat> parse_rationals(const std::string& text) {
  std::vector<Rat> out;
  for (const auto& s : split_list(text)) out.push_back(parse_rational(s));
  return out;
}

std::vector<Int> parse_integers(const std::string& text) {
  std::vector<Int> out;
  for (const auto& s : split_list(text)) {
    Int v;
    if (v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw InputError("not an integer: '" + s + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& v : parse_integers(text)) {
    if (v < 1 || v > 1'000'000) throw InputError("entry out of range in '" + text + "'");
    out.push_back(static_cast<unsigned>(v.get_ui()));
  }
  return out;
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("range must look like 2..50");
  const auto lo = parse_unsigned_list(text.substr(0, dots));
  const auto hi = parse_unsigned_list(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) throw InputError("bad range '" + text + "'");
  return {lo[0], hi[0]};
}

std::vector<std::vector<std::int64_t>> read_vectors(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::vector<std::int64_t>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    for (char& c : line) {
      if (c == ',' || c == '(' || c == ')') c = ' ';
    }
    std::istringstream ls(line);
    std::vector<std::int64_t> v;
    std::int64_t x;
    while (ls >> x) v.push_back(x);
    if (!ls.eof()) throw InputError("bad vector line in " + path + ": '" + line + "'");
    if (!v.empty()) out.push_back(std::move(v));
  }
  if (out.empty()) throw InputError(path + " holds no vectors");
  return out;
}

BasePoint make_base(const std::string& xi, const std::string& tau) {
  std::optional<Rat> t;
  if (!tau.empty()) t = parse_rational(tau);
  return make_base_point(parse_rationals(xi), t);
}

void emit_trace(const GlobalOptions& g, const SearchTrace& trace, std::chrono::steady_clock::duration elapsed) {
  if (g.emit_trace.empty()) return;
  std::string text;
  for (const auto& line : trace.log) text += line + "\n";
  text += "strategy=" + trace.strategy + " primes_tried=" + std::to_string(trace.primes_tried) + "\n";
  text += "elapsed_ms=" +
          std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()) + "\n";
  write_output(g.emit_trace, text);
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const DigestMismatch& e) {
    std::cerr << "digest mismatch: " << e.what() << "\n";
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const PreconditionFailed& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kNoResult;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}

int report_verdict(const VerifyResult& r) {
  if (accepted(r)) {
    std::cout << "Accept\n";
    return kOk;
  }
  const auto& rej = std::get<Reject>(r);
  std::cout << "Reject: " << rej.reason;
  if (rej.witness) std::cout << " (n = " << *rej.witness << ")";
  std::cout << "\n";
  return kRejected;
}

}  // namespace hitforge::cli
