// AES-128 tuned for small ROM: only the S-box and inverse S-box are stored
// (512 table bytes); MixColumns and its inverse are computed with xtime
// chains at runtime. Extensionally identical to the speed-tuned variant.

#include <array>

#include "aes_tables.hpp"
#include "cipher_impls.hpp"

namespace flexisec::detail {
namespace {

constexpr auto kSbox = aes::make_sbox();
constexpr auto kInvSbox = aes::make_inv_sbox(kSbox);

inline std::uint8_t xtime(std::uint8_t x) {
    return static_cast<std::uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1B : 0x00));
}

class AesSize final : public BlockCipher {
  public:
    explicit AesSize(BytesView key)
        : BlockCipher({"aes_size", 128, 128, sizeof(kSbox) + sizeof(kInvSbox)}) {
        require_key_bytes(key, 16, "aes_size");
        std::copy(key.begin(), key.end(), rk_.begin());
        for (int i = 16; i < 176; i += 4) {
            std::uint8_t t[4] = {rk_[i - 4], rk_[i - 3], rk_[i - 2], rk_[i - 1]};
            if (i % 16 == 0) {
                const std::uint8_t tmp = t[0];
                t[0] = static_cast<std::uint8_t>(kSbox[t[1]] ^ aes::kRcon[i / 16 - 1]);
                t[1] = kSbox[t[2]];
                t[2] = kSbox[t[3]];
                t[3] = kSbox[tmp];
            }
            for (int j = 0; j < 4; ++j) rk_[i + j] = rk_[i - 16 + j] ^ t[j];
        }
    }

  private:
    // State is the FIPS column-major layout: byte i of the block sits at
    // state[i], column c = bytes 4c..4c+3.
    void add_round_key(std::uint8_t* s, int round) const {
        for (int i = 0; i < 16; ++i) s[i] ^= rk_[16 * round + i];
    }

    static void sub_bytes(std::uint8_t* s, const std::array<std::uint8_t, 256>& box) {
        for (int i = 0; i < 16; ++i) s[i] = box[s[i]];
    }

    static void shift_rows(std::uint8_t* s) {
        std::uint8_t t = s[1];
        s[1] = s[5];
        s[5] = s[9];
        s[9] = s[13];
        s[13] = t;
        std::swap(s[2], s[10]);
        std::swap(s[6], s[14]);
        t = s[15];
        s[15] = s[11];
        s[11] = s[7];
        s[7] = s[3];
        s[3] = t;
    }

    static void inv_shift_rows(std::uint8_t* s) {
        std::uint8_t t = s[13];
        s[13] = s[9];
        s[9] = s[5];
        s[5] = s[1];
        s[1] = t;
        std::swap(s[2], s[10]);
        std::swap(s[6], s[14]);
        t = s[3];
        s[3] = s[7];
        s[7] = s[11];
        s[11] = s[15];
        s[15] = t;
    }

    static void mix_columns(std::uint8_t* s) {
        for (int c = 0; c < 4; ++c) {
            std::uint8_t* p = s + 4 * c;
            const std::uint8_t a0 = p[0], a1 = p[1], a2 = p[2], a3 = p[3];
            const std::uint8_t all = a0 ^ a1 ^ a2 ^ a3;
            p[0] ^= all ^ xtime(static_cast<std::uint8_t>(a0 ^ a1));
            p[1] ^= all ^ xtime(static_cast<std::uint8_t>(a1 ^ a2));
            p[2] ^= all ^ xtime(static_cast<std::uint8_t>(a2 ^ a3));
            p[3] ^= all ^ xtime(static_cast<std::uint8_t>(a3 ^ a0));
        }
    }

    static void inv_mix_columns(std::uint8_t* s) {
        for (int c = 0; c < 4; ++c) {
            std::uint8_t* p = s + 4 * c;
            const std::uint8_t a0 = p[0], a1 = p[1], a2 = p[2], a3 = p[3];
            // {E,B,D,9} products assembled from doublings: 9=8+1, B=8+2+1,
            // D=8+4+1, E=8+4+2.
            auto x2 = [](std::uint8_t v) { return xtime(v); };
            auto x4 = [&](std::uint8_t v) { return xtime(xtime(v)); };
            auto x8 = [&](std::uint8_t v) { return xtime(xtime(xtime(v))); };
            p[0] = static_cast<std::uint8_t>(x8(a0) ^ x4(a0) ^ x2(a0) ^ x8(a1) ^ x2(a1) ^ a1 ^ x8(a2) ^
                                             x4(a2) ^ a2 ^ x8(a3) ^ a3);
            p[1] = static_cast<std::uint8_t>(x8(a1) ^ x4(a1) ^ x2(a1) ^ x8(a2) ^ x2(a2) ^ a2 ^ x8(a3) ^
                                             x4(a3) ^ a3 ^ x8(a0) ^ a0);
            p[2] = static_cast<std::uint8_t>(x8(a2) ^ x4(a2) ^ x2(a2) ^ x8(a3) ^ x2(a3) ^ a3 ^ x8(a0) ^
                                             x4(a0) ^ a0 ^ x8(a1) ^ a1);
            p[3] = static_cast<std::uint8_t>(x8(a3) ^ x4(a3) ^ x2(a3) ^ x8(a0) ^ x2(a0) ^ a0 ^ x8(a1) ^
                                             x4(a1) ^ a1 ^ x8(a2) ^ a2);
        }
    }

    void do_encrypt(std::uint8_t* block) const override {
        add_round_key(block, 0);
        for (int r = 1; r < 10; ++r) {
            sub_bytes(block, kSbox);
            shift_rows(block);
            mix_columns(block);
            add_round_key(block, r);
        }
        sub_bytes(block, kSbox);
        shift_rows(block);
        add_round_key(block, 10);
    }

    void do_decrypt(std::uint8_t* block) const override {
        add_round_key(block, 10);
        for (int r = 9; r >= 1; --r) {
            inv_shift_rows(block);
            sub_bytes(block, kInvSbox);
            add_round_key(block, r);
            inv_mix_columns(block);
        }
        inv_shift_rows(block);
        sub_bytes(block, kInvSbox);
        add_round_key(block, 0);
    }

    std::array<std::uint8_t, 176> rk_{};
};

}  // namespace

std::unique_ptr<BlockCipher> make_aes_size(BytesView key) { return std::make_unique<AesSize>(key); }

}  // namespace flexisec::detail
