// Skipjack: 64-bit block, 80-bit key, 32 rounds of the unbalanced Feistel
// rules A and B from the declassified NSA specification (May 1998).

#include <array>

#include "cipher_impls.hpp"

namespace flexisec::detail {
namespace {

// The fixed F-table permutation; the cipher's only ROM table (256 bytes).
constexpr std::array<std::uint8_t, 256> kFTable = {
    0xa3, 0xd7, 0x09, 0x83, 0xf8, 0x48, 0xf6, 0xf4, 0xb3, 0x21, 0x15, 0x78, 0x99, 0xb1, 0xaf, 0xf9,
    0xe7, 0x2d, 0x4d, 0x8a, 0xce, 0x4c, 0xca, 0x2e, 0x52, 0x95, 0xd9, 0x1e, 0x4e, 0x38, 0x44, 0x28,
    0x0a, 0xdf, 0x02, 0xa0, 0x17, 0xf1, 0x60, 0x68, 0x12, 0xb7, 0x7a, 0xc3, 0xe9, 0xfa, 0x3d, 0x53,
    0x96, 0x84, 0x6b, 0xba, 0xf2, 0x63, 0x9a, 0x19, 0x7c, 0xae, 0xe5, 0xf5, 0xf7, 0x16, 0x6a, 0xa2,
    0x39, 0xb6, 0x7b, 0x0f, 0xc1, 0x93, 0x81, 0x1b, 0xee, 0xb4, 0x1a, 0xea, 0xd0, 0x91, 0x2f, 0xb8,
    0x55, 0xb9, 0xda, 0x85, 0x3f, 0x41, 0xbf, 0xe0, 0x5a, 0x58, 0x80, 0x5f, 0x66, 0x0b, 0xd8, 0x90,
    0x35, 0xd5, 0xc0, 0xa7, 0x33, 0x06, 0x65, 0x69, 0x45, 0x00, 0x94, 0x56, 0x6d, 0x98, 0x9b, 0x76,
    0x97, 0xfc, 0xb2, 0xc2, 0xb0, 0xfe, 0xdb, 0x20, 0xe1, 0xeb, 0xd6, 0xe4, 0xdd, 0x47, 0x4a, 0x1d,
    0x42, 0xed, 0x9e, 0x6e, 0x49, 0x3c, 0xcd, 0x43, 0x27, 0xd2, 0x07, 0xd4, 0xde, 0xc7, 0x67, 0x18,
    0x89, 0xcb, 0x30, 0x1f, 0x8d, 0xc6, 0x8f, 0xaa, 0xc8, 0x74, 0xdc, 0xc9, 0x5d, 0x5c, 0x31, 0xa4,
    0x70, 0x88, 0x61, 0x2c, 0x9f, 0x0d, 0x2b, 0x87, 0x50, 0x82, 0x54, 0x64, 0x26, 0x7d, 0x03, 0x40,
    0x34, 0x4b, 0x1c, 0x73, 0xd1, 0xc4, 0xfd, 0x3b, 0xcc, 0xfb, 0x7f, 0xab, 0xe6, 0x3e, 0x5b, 0xa5,
    0xad, 0x04, 0x23, 0x9c, 0x14, 0x51, 0x22, 0xf0, 0x29, 0x79, 0x71, 0x7e, 0xff, 0x8c, 0x0e, 0xe2,
    0x0c, 0xef, 0xbc, 0x72, 0x75, 0x6f, 0x37, 0xa1, 0xec, 0xd3, 0x8e, 0x62, 0x8b, 0x86, 0x10, 0xe8,
    0x08, 0x77, 0x11, 0xbe, 0x92, 0x4f, 0x24, 0xc5, 0x32, 0x36, 0x9d, 0xcf, 0xf3, 0xa6, 0xbb, 0xac,
    0x5e, 0x6c, 0xa9, 0x13, 0x57, 0x25, 0xb5, 0xe3, 0xbd, 0xa8, 0x3a, 0x01, 0x05, 0x59, 0x2a, 0x46};

class Skipjack final : public BlockCipher {
  public:
    explicit Skipjack(BytesView key)
        : BlockCipher({"skipjack", 64, 80, sizeof(kFTable)}) {
        require_key_bytes(key, 10, "skipjack");
        std::copy(key.begin(), key.end(), cv_.begin());
    }

  private:
    // G permutation: four F-table Feistel steps over a 16-bit word; step k
    // consumes key bytes (4k..4k+3) mod 10.
    std::uint16_t g(std::uint16_t w, unsigned k) const {
        std::uint8_t g1 = static_cast<std::uint8_t>(w >> 8);
        std::uint8_t g2 = static_cast<std::uint8_t>(w);
        std::uint8_t g3 = kFTable[g2 ^ cv_[(4 * k) % 10]] ^ g1;
        std::uint8_t g4 = kFTable[g3 ^ cv_[(4 * k + 1) % 10]] ^ g2;
        std::uint8_t g5 = kFTable[g4 ^ cv_[(4 * k + 2) % 10]] ^ g3;
        std::uint8_t g6 = kFTable[g5 ^ cv_[(4 * k + 3) % 10]] ^ g4;
        return static_cast<std::uint16_t>((g5 << 8) | g6);
    }

    std::uint16_t g_inv(std::uint16_t w, unsigned k) const {
        std::uint8_t g5 = static_cast<std::uint8_t>(w >> 8);
        std::uint8_t g6 = static_cast<std::uint8_t>(w);
        std::uint8_t g4 = kFTable[g5 ^ cv_[(4 * k + 3) % 10]] ^ g6;
        std::uint8_t g3 = kFTable[g4 ^ cv_[(4 * k + 2) % 10]] ^ g5;
        std::uint8_t g2 = kFTable[g3 ^ cv_[(4 * k + 1) % 10]] ^ g4;
        std::uint8_t g1 = kFTable[g2 ^ cv_[(4 * k) % 10]] ^ g3;
        return static_cast<std::uint16_t>((g1 << 8) | g2);
    }

    void do_encrypt(std::uint8_t* block) const override {
        std::uint16_t w1 = load_be16(block), w2 = load_be16(block + 2);
        std::uint16_t w3 = load_be16(block + 4), w4 = load_be16(block + 6);
        unsigned k = 0;
        for (int half = 0; half < 2; ++half) {
            for (int i = 0; i < 8; ++i) {  // rule A
                std::uint16_t gw = g(w1, k);
                std::uint16_t nw1 = gw ^ w4 ^ static_cast<std::uint16_t>(k + 1);
                w4 = w3;
                w3 = w2;
                w2 = gw;
                w1 = nw1;
                ++k;
            }
            for (int i = 0; i < 8; ++i) {  // rule B
                std::uint16_t nw3 = w1 ^ w2 ^ static_cast<std::uint16_t>(k + 1);
                std::uint16_t nw2 = g(w1, k);
                w1 = w4;
                w4 = w3;
                w3 = nw3;
                w2 = nw2;
                ++k;
            }
        }
        store_be16(block, w1);
        store_be16(block + 2, w2);
        store_be16(block + 4, w3);
        store_be16(block + 6, w4);
    }

    void do_decrypt(std::uint8_t* block) const override {
        std::uint16_t w1 = load_be16(block), w2 = load_be16(block + 2);
        std::uint16_t w3 = load_be16(block + 4), w4 = load_be16(block + 6);
        unsigned k = 31;
        for (int half = 0; half < 2; ++half) {
            for (int i = 0; i < 8; ++i) {  // undo rule B
                std::uint16_t ow1 = g_inv(w2, k);
                std::uint16_t ow2 = ow1 ^ w3 ^ static_cast<std::uint16_t>(k + 1);
                std::uint16_t ow3 = w4;
                std::uint16_t ow4 = w1;
                w1 = ow1;
                w2 = ow2;
                w3 = ow3;
                w4 = ow4;
                --k;
            }
            for (int i = 0; i < 8; ++i) {  // undo rule A
                std::uint16_t ow1 = g_inv(w2, k);
                std::uint16_t ow4 = w1 ^ w2 ^ static_cast<std::uint16_t>(k + 1);
                std::uint16_t ow2 = w3;
                std::uint16_t ow3 = w4;
                w1 = ow1;
                w2 = ow2;
                w3 = ow3;
                w4 = ow4;
                --k;
            }
        }
        store_be16(block, w1);
        store_be16(block + 2, w2);
        store_be16(block + 4, w3);
        store_be16(block + 6, w4);
    }

    std::array<std::uint8_t, 10> cv_{};
};

}  // namespace

std::unique_ptr<BlockCipher> make_skipjack(BytesView key) { return std::make_unique<Skipjack>(key); }

}  // namespace flexisec::detail
