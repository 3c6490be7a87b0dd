#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hitforge/cert_verify.hpp"
#include "hitforge/certificate.hpp"

using namespace hitforge;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("bundled certificates are canonical: save(load(x)) = x") {
  std::size_t n = 0;
  for (const auto* sub : {"certs", "certs/tampered"}) {
    for (const auto& e : fs::directory_iterator(fs::path(HITFORGE_DATA_DIR) / sub)) {
      if (e.path().extension() != ".json") continue;
      CAPTURE(e.path().string());
      const std::string bytes = slurp(e.path());
      CHECK(save(load(bytes)) == bytes);
      ++n;
    }
  }
  CHECK(n >= 20);
}

TEST_CASE("bundled torus anchor is the hand-derived certificate") {
  const auto env = load(slurp(fs::path(HITFORGE_DATA_DIR) / "certs/torus_anchor.json"));
  const auto& c = std::get<ProgressionCertificate>(env.payload);
  CHECK(c.l == 7);
  CHECK(c.M == 6);
  CHECK(c.residues == std::vector<std::uint64_t>{1, 5});
  CHECK(c.fibers == std::vector<std::vector<FiberRecord>>{{{{1, 0, 1}, {2}}}, {{{4, 0, 1}, {2}}}});
}
