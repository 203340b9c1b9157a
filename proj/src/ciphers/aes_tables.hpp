#pragma once
// Compile-time generation of the AES-128 lookup tables from first principles
// (GF(2^8) arithmetic mod x^8+x^4+x^3+x+1). Each cipher variant instantiates
// only the tables it actually stores, so sizeof(tables) is the variant's
// honest ROM budget.

#include <array>
#include <cstdint>

namespace flexisec::detail::aes {

constexpr std::uint8_t gmul(std::uint8_t a, std::uint8_t b) {
    std::uint8_t p = 0;
    for (int i = 0; i < 8; ++i) {
        if (b & 1) p ^= a;
        const bool hi = (a & 0x80) != 0;
        a = static_cast<std::uint8_t>(a << 1);
        if (hi) a ^= 0x1B;
        b >>= 1;
    }
    return p;
}

constexpr std::uint8_t rotl8(std::uint8_t x, int n) {
    return static_cast<std::uint8_t>((x << n) | (x >> (8 - n)));
}

constexpr std::array<std::uint8_t, 256> make_sbox() {
    std::array<std::uint8_t, 256> sbox{};
    for (int x = 0; x < 256; ++x) {
        std::uint8_t inv = 0;
        if (x != 0) {
            for (int y = 1; y < 256; ++y) {
                if (gmul(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)) == 1) {
                    inv = static_cast<std::uint8_t>(y);
                    break;
                }
            }
        }
        sbox[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(
            inv ^ rotl8(inv, 1) ^ rotl8(inv, 2) ^ rotl8(inv, 3) ^ rotl8(inv, 4) ^ 0x63);
    }
    return sbox;
}

constexpr std::array<std::uint8_t, 256> make_inv_sbox(const std::array<std::uint8_t, 256>& sbox) {
    std::array<std::uint8_t, 256> inv{};
    for (int x = 0; x < 256; ++x) inv[sbox[static_cast<std::size_t>(x)]] = static_cast<std::uint8_t>(x);
    return inv;
}

// Te0[x] = MixColumns of the column (S(x),0,0,0): bytes {2S, S, S, 3S}.
constexpr std::array<std::uint32_t, 256> make_te0(const std::array<std::uint8_t, 256>& sbox) {
    std::array<std::uint32_t, 256> t{};
    for (int x = 0; x < 256; ++x) {
        const std::uint8_t s = sbox[static_cast<std::size_t>(x)];
        t[static_cast<std::size_t>(x)] = (static_cast<std::uint32_t>(gmul(2, s)) << 24) |
                                         (static_cast<std::uint32_t>(s) << 16) |
                                         (static_cast<std::uint32_t>(s) << 8) | gmul(3, s);
    }
    return t;
}

// Td0[x] = InvMixColumns of the column (IS(x),0,0,0): bytes {E,9,D,B}*IS(x).
constexpr std::array<std::uint32_t, 256> make_td0(const std::array<std::uint8_t, 256>& inv_sbox) {
    std::array<std::uint32_t, 256> t{};
    for (int x = 0; x < 256; ++x) {
        const std::uint8_t s = inv_sbox[static_cast<std::size_t>(x)];
        t[static_cast<std::size_t>(x)] = (static_cast<std::uint32_t>(gmul(0xE, s)) << 24) |
                                         (static_cast<std::uint32_t>(gmul(0x9, s)) << 16) |
                                         (static_cast<std::uint32_t>(gmul(0xD, s)) << 8) | gmul(0xB, s);
    }
    return t;
}

constexpr std::array<std::uint8_t, 10> kRcon = {0x01, 0x02, 0x04, 0x08, 0x10,
                                                0x20, 0x40, 0x80, 0x1B, 0x36};

}  // namespace flexisec::detail::aes
