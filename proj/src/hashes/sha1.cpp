#include "flexisec/sha1.hpp"

namespace flexisec {
namespace {

inline std::uint32_t rotl(std::uint32_t x, int n) { return (x << n) | (x >> (32 - n)); }

void compress(std::uint32_t h[5], const std::uint8_t* block) {
    std::uint32_t w[80];
    for (int t = 0; t < 16; ++t) w[t] = load_be32(block + 4 * t);
    for (int t = 16; t < 80; ++t) w[t] = rotl(w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16], 1);

    std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
    for (int t = 0; t < 80; ++t) {
        std::uint32_t f, k;
        if (t < 20) {
            f = (b & c) | (~b & d);
            k = 0x5A827999;
        } else if (t < 40) {
            f = b ^ c ^ d;
            k = 0x6ED9EBA1;
        } else if (t < 60) {
            f = (b & c) | (b & d) | (c & d);
            k = 0x8F1BBCDC;
        } else {
            f = b ^ c ^ d;
            k = 0xCA62C1D6;
        }
        const std::uint32_t tmp = rotl(a, 5) + f + e + k + w[t];
        e = d;
        d = c;
        c = rotl(b, 30);
        b = a;
        a = tmp;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
}

}  // namespace

std::array<std::uint8_t, sha1_digest_bytes> sha1(BytesView data) {
    std::uint32_t h[5] = {0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0};

    std::size_t off = 0;
    for (; off + 64 <= data.size(); off += 64) compress(h, data.data() + off);

    // Final padding: 0x80, zeros, then the 64-bit big-endian bit length.
    std::uint8_t tail[128] = {};
    const std::size_t rem = data.size() - off;
    std::copy(data.begin() + static_cast<std::ptrdiff_t>(off), data.end(), tail);
    tail[rem] = 0x80;
    const std::size_t tail_blocks = (rem + 1 + 8 <= 64) ? 1 : 2;
    store_be64(tail + 64 * tail_blocks - 8, static_cast<std::uint64_t>(data.size()) * 8);
    for (std::size_t b = 0; b < tail_blocks; ++b) compress(h, tail + 64 * b);

    std::array<std::uint8_t, sha1_digest_bytes> out{};
    for (int i = 0; i < 5; ++i) store_be32(out.data() + 4 * i, h[i]);
    return out;
}

}  // namespace flexisec
