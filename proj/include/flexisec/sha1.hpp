#pragma once
// SHA-1 (FIPS 180-1). Used by the unkeyed-digest frame mode and the
// digest-ring replay scheme.

#include <array>

#include "flexisec/bytes.hpp"

namespace flexisec {

constexpr std::size_t sha1_digest_bytes = 20;

std::array<std::uint8_t, sha1_digest_bytes> sha1(BytesView data);

}  // namespace flexisec
