#include <cmath>
#include <stdexcept>

#include "cipher_impls.hpp"
#include "flexisec/block_cipher.hpp"

namespace flexisec {

Bytes BlockCipher::encrypt_block(BytesView block) const {
    if (block.size() != block_bytes()) throw std::invalid_argument(spec_.name + ": wrong block length");
    Bytes out(block.begin(), block.end());
    do_encrypt(out.data());
    return out;
}

Bytes BlockCipher::decrypt_block(BytesView block) const {
    if (block.size() != block_bytes()) throw std::invalid_argument(spec_.name + ": wrong block length");
    Bytes out(block.begin(), block.end());
    do_decrypt(out.data());
    return out;
}

namespace detail {

void require_key_bytes(BytesView key, std::size_t expected, const char* cipher) {
    if (key.size() != expected)
        throw std::invalid_argument(std::string(cipher) + ": key must be " + std::to_string(expected) + " bytes");
}

}  // namespace detail

std::unique_ptr<BlockCipher> make_cipher(std::string_view name, BytesView key) {
    if (name == "skipjack") return detail::make_skipjack(key);
    if (name == "tea") return detail::make_tea(key);
    if (name == "xtea") return detail::make_xtea(key);
    if (name == "xxtea") return detail::make_xxtea(key);
    if (name == "xxtea_opt") return detail::make_xxtea_opt(key);
    if (name == "rc6") return detail::make_rc6(key);
    if (name == "aes_speed") return detail::make_aes_speed(key);
    if (name == "aes_size") return detail::make_aes_size(key);
    throw std::invalid_argument("unknown cipher: " + std::string(name));
}

const std::vector<std::string>& cipher_names() {
    static const std::vector<std::string> names = {"skipjack",  "tea", "xtea",      "xxtea",
                                                   "xxtea_opt", "rc6", "aes_speed", "aes_size"};
    return names;
}

int key_horizon(int key_bits) {
    if (key_bits < 56) throw std::invalid_argument("key_horizon: key_bits must be >= 56");
    const double year = 1982.0 + (key_bits - 56) * 30.0 / 23.0;
    return static_cast<int>(std::lround(year));
}

}  // namespace flexisec
