#pragma once

#include <string>
#include <string_view>

#include "hitforge/mpoly.hpp"

namespace hitforge {

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

/// Digest of the canonical printing of f's primitive-integral form.
std::string poly_digest(const MPolyQ& f);

}  // namespace hitforge
