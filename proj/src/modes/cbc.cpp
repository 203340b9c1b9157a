// CBC encryption and CBC-MAC. The MAC prepends one block encoding the
// message byte length, closing the classic variable-length extension
// weakness; that block is the +1 in the N+1 call count.

#include <stdexcept>

#include "flexisec/modes.hpp"

namespace flexisec {
namespace {

void count_call(CallLedger* ledger) {
    if (ledger) ++ledger->cipher_calls;
}

void count_decrypt(CallLedger* ledger) {
    if (ledger) ++ledger->decrypt_calls;
}

}  // namespace

Bytes cbc_encrypt(const BlockCipher& c, BytesView iv, BytesView plaintext, CallLedger* ledger) {
    const std::size_t bs = c.block_bytes();
    if (iv.size() != bs) throw std::invalid_argument("cbc_encrypt: iv must be one block");
    if (plaintext.empty()) throw std::invalid_argument("cbc_encrypt: empty plaintext");

    const std::size_t nblocks = (plaintext.size() + bs - 1) / bs;
    if (ledger) {
        ledger->mode = "cbc";
        ledger->blocks_processed += nblocks;
    }

    Bytes out(nblocks * bs, 0);
    std::copy(plaintext.begin(), plaintext.end(), out.begin());  // zero-pads the final block
    Bytes chain(iv.begin(), iv.end());
    for (std::size_t i = 0; i < nblocks; ++i) {
        std::uint8_t* block = out.data() + i * bs;
        xor_into(block, chain.data(), bs);
        c.encrypt_block(block);
        count_call(ledger);
        chain.assign(block, block + bs);
    }
    return out;
}

Bytes cbc_decrypt(const BlockCipher& c, BytesView iv, BytesView ciphertext, CallLedger* ledger) {
    const std::size_t bs = c.block_bytes();
    if (iv.size() != bs) throw std::invalid_argument("cbc_decrypt: iv must be one block");
    if (ciphertext.empty() || ciphertext.size() % bs != 0)
        throw std::invalid_argument("cbc_decrypt: ciphertext must be a nonzero multiple of the block size");

    const std::size_t nblocks = ciphertext.size() / bs;
    if (ledger) {
        ledger->mode = "cbc";
        ledger->blocks_processed += nblocks;
    }

    Bytes out(ciphertext.begin(), ciphertext.end());
    Bytes chain(iv.begin(), iv.end());
    for (std::size_t i = 0; i < nblocks; ++i) {
        std::uint8_t* block = out.data() + i * bs;
        Bytes next_chain(block, block + bs);
        c.decrypt_block(block);
        count_decrypt(ledger);
        xor_into(block, chain.data(), bs);
        chain = std::move(next_chain);
    }
    return out;
}

Bytes cbc_mac(const BlockCipher& c, BytesView message, std::size_t tag_len, CallLedger* ledger) {
    const std::size_t bs = c.block_bytes();
    if (tag_len != 4 && tag_len != 8) throw std::invalid_argument("cbc_mac: tag_len must be 4 or 8");
    if (message.empty()) throw std::invalid_argument("cbc_mac: empty message");

    const std::size_t nblocks = (message.size() + bs - 1) / bs;
    if (ledger) {
        ledger->mode = "cbc_mac";
        ledger->blocks_processed += nblocks;
    }

    // Length block: the message byte count, big-endian in the trailing
    // 8 bytes (the whole block for 64-bit ciphers).
    Bytes acc(bs, 0);
    store_be64(acc.data() + bs - 8, static_cast<std::uint64_t>(message.size()));
    c.encrypt_block(acc.data());
    count_call(ledger);

    for (std::size_t i = 0; i < nblocks; ++i) {
        const std::size_t off = i * bs;
        const std::size_t n = std::min(bs, message.size() - off);
        for (std::size_t j = 0; j < n; ++j) acc[j] ^= message[off + j];
        c.encrypt_block(acc.data());
        count_call(ledger);
    }
    return Bytes(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(tag_len));
}

}  // namespace flexisec
