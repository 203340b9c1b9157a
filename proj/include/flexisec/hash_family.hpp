#pragma once
// The eight general-purpose string hashes that address the replay Bloom
// filter: RS, JS, PJW, ELF, BKDR, SDBM, DJB, DEK. The classic 32-bit PJW
// parameterization is bit-identical to ELF, so PJW here uses its original
// 64-bit-word parameters (shift 8, high-byte fold) truncated to 32 bits,
// keeping the family pairwise distinct.

#include <array>
#include <string_view>

#include "flexisec/bytes.hpp"

namespace flexisec {

std::uint32_t rs_hash(BytesView data);
std::uint32_t js_hash(BytesView data);
std::uint32_t pjw_hash(BytesView data);
std::uint32_t elf_hash(BytesView data);
std::uint32_t bkdr_hash(BytesView data);
std::uint32_t sdbm_hash(BytesView data);
std::uint32_t djb_hash(BytesView data);
std::uint32_t dek_hash(BytesView data);

class HashFamily {
  public:
    static constexpr std::size_t k = 8;

    // Throws std::out_of_range if index >= k.
    static std::uint32_t value(std::size_t index, BytesView data);

    static const std::array<std::string_view, k>& names();
};

}  // namespace flexisec
