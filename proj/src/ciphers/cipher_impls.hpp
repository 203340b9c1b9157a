#pragma once
// Internal factory hooks for the cipher registry.

#include <memory>

#include "flexisec/block_cipher.hpp"

namespace flexisec::detail {

std::unique_ptr<BlockCipher> make_skipjack(BytesView key);
std::unique_ptr<BlockCipher> make_tea(BytesView key);
std::unique_ptr<BlockCipher> make_xtea(BytesView key);
std::unique_ptr<BlockCipher> make_xxtea(BytesView key);
std::unique_ptr<BlockCipher> make_xxtea_opt(BytesView key);
std::unique_ptr<BlockCipher> make_rc6(BytesView key);
std::unique_ptr<BlockCipher> make_aes_speed(BytesView key);
std::unique_ptr<BlockCipher> make_aes_size(BytesView key);

void require_key_bytes(BytesView key, std::size_t expected, const char* cipher);

}  // namespace flexisec::detail
