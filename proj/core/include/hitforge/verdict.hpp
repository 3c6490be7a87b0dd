#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace hitforge {

struct Accept {};

struct Reject {
  std::string reason;
  std::optional<std::int64_t> witness;  // failing residue or exponent n, when there is one
};

using VerifyResult = std::variant<Accept, Reject>;

inline bool accepted(const VerifyResult& r) { return std::holds_alternative<Accept>(r); }

}  // namespace hitforge
