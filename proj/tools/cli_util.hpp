#pragma once

// Plumbing shared by forge and forge-verify: file I/O, list parsing, and the
// mapping from library outcomes to exit codes.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hitforge/certificate.hpp"

namespace hitforge::cli {

enum Exit : int { kOk = 0, kNoResult = 2, kRejected = 3, kInputError = 4 };

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> max_prime;
  unsigned jobs = 1;
  std::string out;         // empty: stdout
  std::string emit_trace;  // empty: no trace file
};

std::string read_file(const std::string& path);

/// Writes to `path`, or to stdout when it is empty.
void write_output(const std::string& path, const std::string& bytes);

/// One polynomial per file; text after '#' on a line is ignored.
MPolyQ read_poly_file(const std::string& path);
std::vector<CoverSpec> read_covers(const std::vector<std::string>& paths);

/// "2,3,-1/2"
std::vector<Rat> parse_rationals(const std::string& text);
std::vector<Int> parse_integers(const std::string& text);
std::vector<unsigned> parse_unsigned_list(const std::string& text);

/// "2..50"
std::pair<unsigned, unsigned> parse_range(const std::string& text);

/// One exponent vector per non-comment line, entries separated by commas or
/// spaces.
std::vector<std::vector<std::int64_t>> read_vectors(const std::string& path);

BasePoint make_base(const std::string& xi, const std::string& tau);

/// Writes the search log and elapsed time when --emit-trace was given.
void emit_trace(const GlobalOptions& g, const SearchTrace& trace, std::chrono::steady_clock::duration elapsed);

/// Runs `body` and turns library exceptions into exit codes with a one-line
/// message on stderr.
int guarded(const std::function<int()>& body);

/// Prints the verdict of a verifier and returns the matching exit code.
int report_verdict(const VerifyResult& r);

}  // namespace hitforge::cli
