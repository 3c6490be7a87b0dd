#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hitforge {

/// What a prime scan did before it stopped.  Shared by every search module.
struct SearchTrace {
  std::uint64_t primes_tried = 0;
  std::vector<std::uint64_t> bad_primes;
  std::vector<std::uint64_t> skipped_primes;  // modulus or period over the cap
  std::vector<std::uint64_t> torsion_hits;    // primes where a transfer landed
  std::string strategy;
  std::vector<std::string> log;               // one line per prime, for --emit-trace
};

struct Exhausted {
  SearchTrace trace;
};

}  // namespace hitforge
