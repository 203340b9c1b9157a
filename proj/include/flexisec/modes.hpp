#pragma once
// Block-cipher modes of operation, each instrumented with a call ledger so
// callers can account for per-message cipher invocations:
//   cbc_encrypt/decrypt   N calls per N-block message (zero-padded final block)
//   cbc_mac               N+1 calls (a length block is prepended)
//   ocb_seal/open         N+2 calls (offset setup + blocks + tag)
//   ccm_seal/open         2N+2 calls (CBC-MAC pass + counter pass), 128-bit only
//   gcm_seal/open         counter pass + GF(2^128) MAC; never calls decrypt_block
// Raw counter mode is internal to CCM/GCM and deliberately not exported.

#include "flexisec/block_cipher.hpp"
#include "flexisec/bytes.hpp"

namespace flexisec {

struct CallLedger {
    std::string mode;
    std::uint64_t cipher_calls = 0;   // encrypt_block invocations
    std::uint64_t decrypt_calls = 0;  // decrypt_block invocations
    std::uint64_t blocks_processed = 0;
};

struct AeadOutput {
    Bytes ciphertext;
    Bytes tag;  // 4 or 8 bytes
};

struct OpenResult {
    Bytes plaintext;  // empty unless valid
    bool valid = false;
};

Bytes cbc_encrypt(const BlockCipher& c, BytesView iv, BytesView plaintext, CallLedger* ledger = nullptr);
Bytes cbc_decrypt(const BlockCipher& c, BytesView iv, BytesView ciphertext, CallLedger* ledger = nullptr);

Bytes cbc_mac(const BlockCipher& c, BytesView message, std::size_t tag_len, CallLedger* ledger = nullptr);

AeadOutput ocb_seal(const BlockCipher& c, BytesView nonce, BytesView plaintext, std::size_t tag_len,
                    CallLedger* ledger = nullptr);
OpenResult ocb_open(const BlockCipher& c, BytesView nonce, BytesView ciphertext, BytesView tag,
                    CallLedger* ledger = nullptr);

AeadOutput ccm_seal(const BlockCipher& c, BytesView nonce, BytesView plaintext, std::size_t tag_len,
                    CallLedger* ledger = nullptr);
OpenResult ccm_open(const BlockCipher& c, BytesView nonce, BytesView ciphertext, BytesView tag,
                    CallLedger* ledger = nullptr);

AeadOutput gcm_seal(const BlockCipher& c, BytesView iv, BytesView plaintext, BytesView aad,
                    std::size_t tag_len, CallLedger* ledger = nullptr);
OpenResult gcm_open(const BlockCipher& c, BytesView iv, BytesView ciphertext, BytesView aad, BytesView tag,
                    CallLedger* ledger = nullptr);

namespace detail {
// GF(2^128) product used by the GCM MAC; operands and result are 16-byte
// big-endian field elements. Exposed for property tests.
void gf128_mul(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out);
}  // namespace detail

}  // namespace flexisec
