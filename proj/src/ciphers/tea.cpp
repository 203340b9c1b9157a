// TEA: 64-bit block, 128-bit key, 32 double-rounds (Wheeler & Needham 1994).
// Words are loaded big-endian so test vectors are byte-order stable.

#include <array>

#include "cipher_impls.hpp"

namespace flexisec::detail {
namespace {

class Tea final : public BlockCipher {
  public:
    explicit Tea(BytesView key) : BlockCipher({"tea", 64, 128, 0}) {
        require_key_bytes(key, 16, "tea");
        for (int i = 0; i < 4; ++i) k_[i] = load_be32(key.data() + 4 * i);
    }

  private:
    void do_encrypt(std::uint8_t* block) const override {
        std::uint32_t v0 = load_be32(block), v1 = load_be32(block + 4), sum = 0;
        for (int i = 0; i < 32; ++i) {
            sum += tea_delta();
            v0 += ((v1 << 4) + k_[0]) ^ (v1 + sum) ^ ((v1 >> 5) + k_[1]);
            v1 += ((v0 << 4) + k_[2]) ^ (v0 + sum) ^ ((v0 >> 5) + k_[3]);
        }
        store_be32(block, v0);
        store_be32(block + 4, v1);
    }

    void do_decrypt(std::uint8_t* block) const override {
        std::uint32_t v0 = load_be32(block), v1 = load_be32(block + 4);
        std::uint32_t sum = tea_delta() * 32u;
        for (int i = 0; i < 32; ++i) {
            v1 -= ((v0 << 4) + k_[2]) ^ (v0 + sum) ^ ((v0 >> 5) + k_[3]);
            v0 -= ((v1 << 4) + k_[0]) ^ (v1 + sum) ^ ((v1 >> 5) + k_[1]);
            sum -= tea_delta();
        }
        store_be32(block, v0);
        store_be32(block + 4, v1);
    }

    std::array<std::uint32_t, 4> k_{};
};

}  // namespace

std::unique_ptr<BlockCipher> make_tea(BytesView key) { return std::make_unique<Tea>(key); }

}  // namespace flexisec::detail
