// XXTEA (corrected block TEA) pinned to a 2-word, 64-bit block: 6 + 52/2 = 32
// full cycles. Two registered variants share the round structure:
//   xxtea      computes the per-cycle sum and key index on the fly (no tables)
//   xxtea_opt  precomputes a 32-entry sum table plus a 32x4 cycle-permuted key
//              schedule (128 + 512 = 640 bytes) and trades that ROM for the
//              per-round index arithmetic

#include <array>

#include "cipher_impls.hpp"

namespace flexisec::detail {
namespace {

constexpr int kCycles = 32;  // 6 + 52/n at n = 2

inline std::uint32_t mx(std::uint32_t z, std::uint32_t y, std::uint32_t sum, std::uint32_t kw) {
    return (((z >> 5) ^ (y << 2)) + ((y >> 3) ^ (z << 4))) ^ ((sum ^ y) + (kw ^ z));
}

// KeyAt(cycle, p) -> the key word MX consumes for lane p in that cycle.
template <typename KeyAt>
void btea2_encrypt(std::uint32_t& v0, std::uint32_t& v1, const std::uint32_t* sums, KeyAt key_at) {
    std::uint32_t z = v1;
    for (int c = 0; c < kCycles; ++c) {
        const std::uint32_t sum = sums[c];
        v0 += mx(z, v1, sum, key_at(c, 0));
        z = v0;
        v1 += mx(z, v0, sum, key_at(c, 1));
        z = v1;
    }
}

template <typename KeyAt>
void btea2_decrypt(std::uint32_t& v0, std::uint32_t& v1, const std::uint32_t* sums, KeyAt key_at) {
    std::uint32_t y = v0;
    for (int c = kCycles - 1; c >= 0; --c) {
        const std::uint32_t sum = sums[c];
        v1 -= mx(v0, y, sum, key_at(c, 1));
        y = v1;
        v0 -= mx(v1, y, sum, key_at(c, 0));
        y = v0;
    }
}

std::array<std::uint32_t, kCycles> cycle_sums() {
    std::array<std::uint32_t, kCycles> sums{};
    std::uint32_t sum = 0;
    for (int c = 0; c < kCycles; ++c) {
        sum += tea_delta();
        sums[c] = sum;
    }
    return sums;
}

class Xxtea final : public BlockCipher {
  public:
    explicit Xxtea(BytesView key) : BlockCipher({"xxtea", 64, 128, 0}) {
        require_key_bytes(key, 16, "xxtea");
        for (int i = 0; i < 4; ++i) k_[i] = load_be32(key.data() + 4 * i);
    }

  private:
    void do_encrypt(std::uint8_t* block) const override {
        const auto sums = cycle_sums();
        std::uint32_t v0 = load_be32(block), v1 = load_be32(block + 4);
        btea2_encrypt(v0, v1, sums.data(), [&](int c, int p) {
            const std::uint32_t e = (sums[c] >> 2) & 3;
            return k_[static_cast<std::size_t>(p) ^ e];
        });
        store_be32(block, v0);
        store_be32(block + 4, v1);
    }

    void do_decrypt(std::uint8_t* block) const override {
        const auto sums = cycle_sums();
        std::uint32_t v0 = load_be32(block), v1 = load_be32(block + 4);
        btea2_decrypt(v0, v1, sums.data(), [&](int c, int p) {
            const std::uint32_t e = (sums[c] >> 2) & 3;
            return k_[static_cast<std::size_t>(p) ^ e];
        });
        store_be32(block, v0);
        store_be32(block + 4, v1);
    }

    std::array<std::uint32_t, 4> k_{};
};

class XxteaOpt final : public BlockCipher {
  public:
    explicit XxteaOpt(BytesView key)
        : BlockCipher({"xxtea_opt", 64, 128, sizeof(sums_) + sizeof(sched_)}) {
        require_key_bytes(key, 16, "xxtea_opt");
        std::uint32_t k[4];
        for (int i = 0; i < 4; ++i) k[i] = load_be32(key.data() + 4 * i);
        sums_ = cycle_sums();
        for (int c = 0; c < kCycles; ++c) {
            const std::uint32_t e = (sums_[c] >> 2) & 3;
            for (std::uint32_t p = 0; p < 4; ++p) sched_[c][p] = k[p ^ e];
        }
    }

  private:
    void do_encrypt(std::uint8_t* block) const override {
        std::uint32_t v0 = load_be32(block), v1 = load_be32(block + 4);
        btea2_encrypt(v0, v1, sums_.data(), [&](int c, int p) { return sched_[c][p]; });
        store_be32(block, v0);
        store_be32(block + 4, v1);
    }

    void do_decrypt(std::uint8_t* block) const override {
        std::uint32_t v0 = load_be32(block), v1 = load_be32(block + 4);
        btea2_decrypt(v0, v1, sums_.data(), [&](int c, int p) { return sched_[c][p]; });
        store_be32(block, v0);
        store_be32(block + 4, v1);
    }

    std::array<std::uint32_t, kCycles> sums_{};
    std::array<std::array<std::uint32_t, 4>, kCycles> sched_{};
};

}  // namespace

std::unique_ptr<BlockCipher> make_xxtea(BytesView key) { return std::make_unique<Xxtea>(key); }
std::unique_ptr<BlockCipher> make_xxtea_opt(BytesView key) { return std::make_unique<XxteaOpt>(key); }

}  // namespace flexisec::detail
