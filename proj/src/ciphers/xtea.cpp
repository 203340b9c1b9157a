// XTEA: 64-bit block, 128-bit key, 64 Feistel rounds (Needham & Wheeler 1997).

#include <array>

#include "cipher_impls.hpp"

namespace flexisec::detail {
namespace {

class Xtea final : public BlockCipher {
  public:
    explicit Xtea(BytesView key) : BlockCipher({"xtea", 64, 128, 0}) {
        require_key_bytes(key, 16, "xtea");
        for (int i = 0; i < 4; ++i) k_[i] = load_be32(key.data() + 4 * i);
    }

  private:
    void do_encrypt(std::uint8_t* block) const override {
        std::uint32_t v0 = load_be32(block), v1 = load_be32(block + 4), sum = 0;
        for (int i = 0; i < 32; ++i) {
            v0 += (((v1 << 4) ^ (v1 >> 5)) + v1) ^ (sum + k_[sum & 3]);
            sum += tea_delta();
            v1 += (((v0 << 4) ^ (v0 >> 5)) + v0) ^ (sum + k_[(sum >> 11) & 3]);
        }
        store_be32(block, v0);
        store_be32(block + 4, v1);
    }

    void do_decrypt(std::uint8_t* block) const override {
        std::uint32_t v0 = load_be32(block), v1 = load_be32(block + 4);
        std::uint32_t sum = tea_delta() * 32u;
        for (int i = 0; i < 32; ++i) {
            v1 -= (((v0 << 4) ^ (v0 >> 5)) + v0) ^ (sum + k_[(sum >> 11) & 3]);
            sum -= tea_delta();
            v0 -= (((v1 << 4) ^ (v1 >> 5)) + v1) ^ (sum + k_[sum & 3]);
        }
        store_be32(block, v0);
        store_be32(block + 4, v1);
    }

    std::array<std::uint32_t, 4> k_{};
};

}  // namespace

std::unique_ptr<BlockCipher> make_xtea(BytesView key) { return std::make_unique<Xtea>(key); }

}  // namespace flexisec::detail
