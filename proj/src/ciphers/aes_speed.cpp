// AES-128 tuned for speed on table-tolerant targets: one 1KB round table per
// direction plus the 256-byte inverse S-box for the final decrypt round
// (2304 table bytes total). The forward S-box is read out of Te0's middle
// lane, so it costs no extra ROM; the rotated companion tables Te1..Te3 /
// Td1..Td3 are derived by word rotation instead of being stored.

#include <array>

#include "aes_tables.hpp"
#include "cipher_impls.hpp"

namespace flexisec::detail {
namespace {

constexpr auto kSbox = aes::make_sbox();  // used only at key setup, not stored per spec()
constexpr auto kTe0 = aes::make_te0(kSbox);
constexpr auto kInvSbox = aes::make_inv_sbox(kSbox);
constexpr auto kTd0 = aes::make_td0(kInvSbox);

inline std::uint32_t ror32(std::uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

inline std::uint8_t sbox_at(std::uint8_t x) {
    return static_cast<std::uint8_t>(kTe0[x] >> 8);  // Te0 lane 2 holds S(x)
}

inline std::uint32_t sub_word(std::uint32_t w) {
    return (static_cast<std::uint32_t>(sbox_at(static_cast<std::uint8_t>(w >> 24))) << 24) |
           (static_cast<std::uint32_t>(sbox_at(static_cast<std::uint8_t>(w >> 16))) << 16) |
           (static_cast<std::uint32_t>(sbox_at(static_cast<std::uint8_t>(w >> 8))) << 8) |
           sbox_at(static_cast<std::uint8_t>(w));
}

inline std::uint32_t inv_mix_columns(std::uint32_t w) {
    return kTd0[sbox_at(static_cast<std::uint8_t>(w >> 24))] ^
           ror32(kTd0[sbox_at(static_cast<std::uint8_t>(w >> 16))], 8) ^
           ror32(kTd0[sbox_at(static_cast<std::uint8_t>(w >> 8))], 16) ^
           ror32(kTd0[sbox_at(static_cast<std::uint8_t>(w))], 24);
}

class AesSpeed final : public BlockCipher {
  public:
    explicit AesSpeed(BytesView key)
        : BlockCipher({"aes_speed", 128, 128, sizeof(kTe0) + sizeof(kTd0) + sizeof(kInvSbox)}) {
        require_key_bytes(key, 16, "aes_speed");
        for (int i = 0; i < 4; ++i) rk_[i] = load_be32(key.data() + 4 * i);
        for (int i = 4; i < 44; ++i) {
            std::uint32_t t = rk_[i - 1];
            if (i % 4 == 0)
                t = sub_word((t << 8) | (t >> 24)) ^ (static_cast<std::uint32_t>(aes::kRcon[i / 4 - 1]) << 24);
            rk_[i] = rk_[i - 4] ^ t;
        }
        // Equivalent-inverse schedule: reverse round order, InvMixColumns on
        // the interior rounds.
        for (int r = 0; r <= 10; ++r)
            for (int j = 0; j < 4; ++j) dk_[4 * r + j] = rk_[4 * (10 - r) + j];
        for (int i = 4; i < 40; ++i) dk_[i] = inv_mix_columns(dk_[i]);
    }

  private:
    void do_encrypt(std::uint8_t* block) const override {
        std::uint32_t s0 = load_be32(block) ^ rk_[0];
        std::uint32_t s1 = load_be32(block + 4) ^ rk_[1];
        std::uint32_t s2 = load_be32(block + 8) ^ rk_[2];
        std::uint32_t s3 = load_be32(block + 12) ^ rk_[3];
        for (int r = 1; r < 10; ++r) {
            const std::uint32_t* rk = &rk_[4 * r];
            const std::uint32_t t0 = round_word(s0, s1, s2, s3) ^ rk[0];
            const std::uint32_t t1 = round_word(s1, s2, s3, s0) ^ rk[1];
            const std::uint32_t t2 = round_word(s2, s3, s0, s1) ^ rk[2];
            const std::uint32_t t3 = round_word(s3, s0, s1, s2) ^ rk[3];
            s0 = t0;
            s1 = t1;
            s2 = t2;
            s3 = t3;
        }
        store_be32(block, final_word(s0, s1, s2, s3) ^ rk_[40]);
        store_be32(block + 4, final_word(s1, s2, s3, s0) ^ rk_[41]);
        store_be32(block + 8, final_word(s2, s3, s0, s1) ^ rk_[42]);
        store_be32(block + 12, final_word(s3, s0, s1, s2) ^ rk_[43]);
    }

    void do_decrypt(std::uint8_t* block) const override {
        std::uint32_t s0 = load_be32(block) ^ dk_[0];
        std::uint32_t s1 = load_be32(block + 4) ^ dk_[1];
        std::uint32_t s2 = load_be32(block + 8) ^ dk_[2];
        std::uint32_t s3 = load_be32(block + 12) ^ dk_[3];
        for (int r = 1; r < 10; ++r) {
            const std::uint32_t* rk = &dk_[4 * r];
            const std::uint32_t t0 = inv_round_word(s0, s3, s2, s1) ^ rk[0];
            const std::uint32_t t1 = inv_round_word(s1, s0, s3, s2) ^ rk[1];
            const std::uint32_t t2 = inv_round_word(s2, s1, s0, s3) ^ rk[2];
            const std::uint32_t t3 = inv_round_word(s3, s2, s1, s0) ^ rk[3];
            s0 = t0;
            s1 = t1;
            s2 = t2;
            s3 = t3;
        }
        store_be32(block, inv_final_word(s0, s3, s2, s1) ^ dk_[40]);
        store_be32(block + 4, inv_final_word(s1, s0, s3, s2) ^ dk_[41]);
        store_be32(block + 8, inv_final_word(s2, s1, s0, s3) ^ dk_[42]);
        store_be32(block + 12, inv_final_word(s3, s2, s1, s0) ^ dk_[43]);
    }

    static std::uint32_t round_word(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
        return kTe0[a >> 24] ^ ror32(kTe0[(b >> 16) & 0xFF], 8) ^ ror32(kTe0[(c >> 8) & 0xFF], 16) ^
               ror32(kTe0[d & 0xFF], 24);
    }

    static std::uint32_t final_word(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
        return (static_cast<std::uint32_t>(sbox_at(static_cast<std::uint8_t>(a >> 24))) << 24) |
               (static_cast<std::uint32_t>(sbox_at(static_cast<std::uint8_t>(b >> 16))) << 16) |
               (static_cast<std::uint32_t>(sbox_at(static_cast<std::uint8_t>(c >> 8))) << 8) |
               sbox_at(static_cast<std::uint8_t>(d));
    }

    static std::uint32_t inv_round_word(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
        return kTd0[a >> 24] ^ ror32(kTd0[(b >> 16) & 0xFF], 8) ^ ror32(kTd0[(c >> 8) & 0xFF], 16) ^
               ror32(kTd0[d & 0xFF], 24);
    }

    static std::uint32_t inv_final_word(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
        return (static_cast<std::uint32_t>(kInvSbox[a >> 24]) << 24) |
               (static_cast<std::uint32_t>(kInvSbox[(b >> 16) & 0xFF]) << 16) |
               (static_cast<std::uint32_t>(kInvSbox[(c >> 8) & 0xFF]) << 8) | kInvSbox[d & 0xFF];
    }

    std::array<std::uint32_t, 44> rk_{};
    std::array<std::uint32_t, 44> dk_{};
};

}  // namespace

std::unique_ptr<BlockCipher> make_aes_speed(BytesView key) { return std::make_unique<AesSpeed>(key); }

}  // namespace flexisec::detail
