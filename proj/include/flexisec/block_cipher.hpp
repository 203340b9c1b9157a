#pragma once
// Keyed block-cipher interface and registry. Every cipher reports its block
// size, key size, and the ROM bytes of lookup tables it carries beyond the
// raw key schedule its definition requires; the benchmark layer treats those
// table budgets as the storage figure of merit.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "flexisec/bytes.hpp"

namespace flexisec {

struct CipherSpec {
    std::string name;
    unsigned block_bits = 0;
    unsigned key_bits = 0;
    std::size_t table_bytes = 0;  // lookup tables beyond the definitional key schedule
};

class BlockCipher {
  public:
    virtual ~BlockCipher() = default;

    const CipherSpec& spec() const { return spec_; }
    std::size_t block_bytes() const { return spec_.block_bits / 8; }

    // In-place single-block permutation; block must be exactly block_bytes().
    void encrypt_block(std::uint8_t* block) const { do_encrypt(block); }
    void decrypt_block(std::uint8_t* block) const { do_decrypt(block); }

    Bytes encrypt_block(BytesView block) const;
    Bytes decrypt_block(BytesView block) const;

  protected:
    explicit BlockCipher(CipherSpec spec) : spec_(std::move(spec)) {}
    virtual void do_encrypt(std::uint8_t* block) const = 0;
    virtual void do_decrypt(std::uint8_t* block) const = 0;

  private:
    CipherSpec spec_;
};

// Registered names: skipjack, tea, xtea, xxtea, xxtea_opt, rc6, aes_speed,
// aes_size. Throws std::invalid_argument on an unknown name or a key whose
// length differs from the cipher's key_bits/8.
std::unique_ptr<BlockCipher> make_cipher(std::string_view name, BytesView key);

const std::vector<std::string>& cipher_names();

// Round constant shared by the TEA family: floor((sqrt(5)-1) * 2^31).
constexpr std::uint32_t tea_delta() { return 0x9E3779B9u; }

// Linear key-lifetime projection, anchored at 56-bit keys in 1982 and
// growing 23 bits per 30 years; returns the nearest projected year a
// brute-force attack catches up with the given key size.
int key_horizon(int key_bits);

}  // namespace flexisec
