// RC6-32/20/16: 128-bit block, 128-bit key, 20 rounds (Rivest et al., AES
// submission). Words are little-endian per the original definition.

#include <array>

#include "cipher_impls.hpp"

namespace flexisec::detail {
namespace {

constexpr int kRounds = 20;
constexpr std::uint32_t kP32 = 0xB7E15163u;
constexpr std::uint32_t kQ32 = 0x9E3779B9u;

inline std::uint32_t rotl(std::uint32_t x, std::uint32_t n) {
    n &= 31;
    return n ? (x << n) | (x >> (32 - n)) : x;
}

inline std::uint32_t rotr(std::uint32_t x, std::uint32_t n) {
    n &= 31;
    return n ? (x >> n) | (x << (32 - n)) : x;
}

class Rc6 final : public BlockCipher {
  public:
    explicit Rc6(BytesView key) : BlockCipher({"rc6", 128, 128, 0}) {
        require_key_bytes(key, 16, "rc6");
        std::array<std::uint32_t, 4> l{};
        for (int i = 0; i < 4; ++i) l[i] = load_le32(key.data() + 4 * i);
        s_[0] = kP32;
        for (std::size_t i = 1; i < s_.size(); ++i) s_[i] = s_[i - 1] + kQ32;
        std::uint32_t a = 0, b = 0;
        std::size_t i = 0, j = 0;
        for (std::size_t t = 0; t < 3 * s_.size(); ++t) {
            a = s_[i] = rotl(s_[i] + a + b, 3);
            b = l[j] = rotl(l[j] + a + b, a + b);
            i = (i + 1) % s_.size();
            j = (j + 1) % l.size();
        }
    }

  private:
    void do_encrypt(std::uint8_t* block) const override {
        std::uint32_t a = load_le32(block), b = load_le32(block + 4);
        std::uint32_t c = load_le32(block + 8), d = load_le32(block + 12);
        b += s_[0];
        d += s_[1];
        for (int i = 1; i <= kRounds; ++i) {
            const std::uint32_t t = rotl(b * (2 * b + 1), 5);
            const std::uint32_t u = rotl(d * (2 * d + 1), 5);
            a = rotl(a ^ t, u) + s_[2 * i];
            c = rotl(c ^ u, t) + s_[2 * i + 1];
            const std::uint32_t tmp = a;
            a = b;
            b = c;
            c = d;
            d = tmp;
        }
        a += s_[2 * kRounds + 2];
        c += s_[2 * kRounds + 3];
        store_le32(block, a);
        store_le32(block + 4, b);
        store_le32(block + 8, c);
        store_le32(block + 12, d);
    }

    void do_decrypt(std::uint8_t* block) const override {
        std::uint32_t a = load_le32(block), b = load_le32(block + 4);
        std::uint32_t c = load_le32(block + 8), d = load_le32(block + 12);
        c -= s_[2 * kRounds + 3];
        a -= s_[2 * kRounds + 2];
        for (int i = kRounds; i >= 1; --i) {
            const std::uint32_t tmp = d;
            d = c;
            c = b;
            b = a;
            a = tmp;
            const std::uint32_t u = rotl(d * (2 * d + 1), 5);
            const std::uint32_t t = rotl(b * (2 * b + 1), 5);
            c = rotr(c - s_[2 * i + 1], t) ^ u;
            a = rotr(a - s_[2 * i], u) ^ t;
        }
        d -= s_[1];
        b -= s_[0];
        store_le32(block, a);
        store_le32(block + 4, b);
        store_le32(block + 8, c);
        store_le32(block + 12, d);
    }

    std::array<std::uint32_t, 2 * kRounds + 4> s_{};
};

}  // namespace

std::unique_ptr<BlockCipher> make_rc6(BytesView key) { return std::make_unique<Rc6>(key); }

}  // namespace flexisec::detail
