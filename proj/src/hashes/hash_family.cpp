#include "flexisec/hash_family.hpp"

#include <stdexcept>

namespace flexisec {

std::uint32_t rs_hash(BytesView data) {
    std::uint32_t b = 378551, a = 63689, hash = 0;
    for (std::uint8_t c : data) {
        hash = hash * a + c;
        a *= b;
    }
    return hash;
}

std::uint32_t js_hash(BytesView data) {
    std::uint32_t hash = 1315423911;
    for (std::uint8_t c : data) hash ^= (hash << 5) + c + (hash >> 2);
    return hash;
}

std::uint32_t pjw_hash(BytesView data) {
    // 64-bit-word parameterization: OneEighth = 8, ThreeQuarters = 48,
    // HighBits = top byte; result truncated to 32 bits.
    constexpr std::uint64_t kHighBits = 0xFF00000000000000ull;
    std::uint64_t hash = 0;
    for (std::uint8_t c : data) {
        hash = (hash << 8) + c;
        if (const std::uint64_t test = hash & kHighBits) hash = (hash ^ (test >> 48)) & ~kHighBits;
    }
    return static_cast<std::uint32_t>(hash);
}

std::uint32_t elf_hash(BytesView data) {
    std::uint32_t hash = 0;
    for (std::uint8_t c : data) {
        hash = (hash << 4) + c;
        if (const std::uint32_t x = hash & 0xF0000000u) hash ^= x >> 24;
        hash &= ~(hash & 0xF0000000u);
    }
    return hash;
}

std::uint32_t bkdr_hash(BytesView data) {
    std::uint32_t hash = 0;
    for (std::uint8_t c : data) hash = hash * 131 + c;
    return hash;
}

std::uint32_t sdbm_hash(BytesView data) {
    std::uint32_t hash = 0;
    for (std::uint8_t c : data) hash = c + (hash << 6) + (hash << 16) - hash;
    return hash;
}

std::uint32_t djb_hash(BytesView data) {
    std::uint32_t hash = 5381;
    for (std::uint8_t c : data) hash = ((hash << 5) + hash) + c;
    return hash;
}

std::uint32_t dek_hash(BytesView data) {
    std::uint32_t hash = static_cast<std::uint32_t>(data.size());
    for (std::uint8_t c : data) hash = ((hash << 5) ^ (hash >> 27)) ^ c;
    return hash;
}

std::uint32_t HashFamily::value(std::size_t index, BytesView data) {
    switch (index) {
        case 0: return rs_hash(data);
        case 1: return js_hash(data);
        case 2: return pjw_hash(data);
        case 3: return elf_hash(data);
        case 4: return bkdr_hash(data);
        case 5: return sdbm_hash(data);
        case 6: return djb_hash(data);
        case 7: return dek_hash(data);
        default: throw std::out_of_range("HashFamily::value: index out of range");
    }
}

const std::array<std::string_view, HashFamily::k>& HashFamily::names() {
    static const std::array<std::string_view, HashFamily::k> n = {"rs",   "js",   "pjw", "elf",
                                                                  "bkdr", "sdbm", "djb", "dek"};
    return n;
}

}  // namespace flexisec
