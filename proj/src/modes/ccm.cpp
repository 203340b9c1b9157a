// Counter-with-CBC-MAC, RFC 3610 shape: L = 2 (16-bit message length),
// 13-byte nonce (shorter nonces are zero-padded on the right), no
// associated-data channel. Two passes over the message: 2N+2 cipher calls.
// Requires a 128-bit block cipher.

#include <algorithm>
#include <stdexcept>

#include "flexisec/modes.hpp"

namespace flexisec {
namespace {

constexpr std::size_t kBlock = 16;
constexpr std::size_t kNonceLen = 13;  // 15 - L with L = 2

struct CcmCtx {
    std::uint8_t nonce[kNonceLen];

    CcmCtx(const BlockCipher& c, BytesView nonce_in) {
        if (c.block_bytes() != kBlock) throw std::invalid_argument("ccm: requires a 128-bit block cipher");
        if (nonce_in.size() > kNonceLen) throw std::invalid_argument("ccm: nonce longer than 13 bytes");
        std::fill(nonce, nonce + kNonceLen, 0);
        std::copy(nonce_in.begin(), nonce_in.end(), nonce);
    }

    void counter_block(std::uint8_t out[kBlock], std::uint16_t index) const {
        out[0] = 0x01;  // flags: L' = L-1
        std::copy(nonce, nonce + kNonceLen, out + 1);
        store_be16(out + 14, index);
    }
};

void check_tag_len(std::size_t tag_len) {
    if (tag_len != 4 && tag_len != 8) throw std::invalid_argument("ccm: tag_len must be 4 or 8");
}

// CBC-MAC over B0 || message (zero-padded); returns the full final block.
Bytes ccm_mac(const BlockCipher& c, const CcmCtx& ctx, BytesView msg, std::size_t tag_len,
              CallLedger* ledger) {
    Bytes x(kBlock, 0);
    x[0] = static_cast<std::uint8_t>((((tag_len - 2) / 2) << 3) | 0x01);  // Adata=0, M', L'
    std::copy(ctx.nonce, ctx.nonce + kNonceLen, x.begin() + 1);
    store_be16(x.data() + 14, static_cast<std::uint16_t>(msg.size()));
    c.encrypt_block(x.data());
    if (ledger) ++ledger->cipher_calls;

    for (std::size_t off = 0; off < msg.size(); off += kBlock) {
        const std::size_t n = std::min(kBlock, msg.size() - off);
        for (std::size_t j = 0; j < n; ++j) x[j] ^= msg[off + j];
        c.encrypt_block(x.data());
        if (ledger) ++ledger->cipher_calls;
    }
    return x;
}

// Counter-mode keystream application; index 0 is reserved for tag masking.
void ccm_ctr(const BlockCipher& c, const CcmCtx& ctx, const std::uint8_t* in, std::uint8_t* out,
             std::size_t len, CallLedger* ledger) {
    std::uint8_t block[kBlock];
    for (std::size_t off = 0; off < len; off += kBlock) {
        ctx.counter_block(block, static_cast<std::uint16_t>(off / kBlock + 1));
        c.encrypt_block(block);
        if (ledger) ++ledger->cipher_calls;
        const std::size_t n = std::min(kBlock, len - off);
        for (std::size_t j = 0; j < n; ++j) out[off + j] = in[off + j] ^ block[j];
    }
}

Bytes tag_mask(const BlockCipher& c, const CcmCtx& ctx, CallLedger* ledger) {
    Bytes s0(kBlock);
    ctx.counter_block(s0.data(), 0);
    c.encrypt_block(s0.data());
    if (ledger) ++ledger->cipher_calls;
    return s0;
}

}  // namespace

AeadOutput ccm_seal(const BlockCipher& c, BytesView nonce, BytesView plaintext, std::size_t tag_len,
                    CallLedger* ledger) {
    check_tag_len(tag_len);
    if (plaintext.empty()) throw std::invalid_argument("ccm_seal: empty plaintext");
    if (plaintext.size() > 0xFFFF) throw std::invalid_argument("ccm_seal: message too long for L=2");

    CcmCtx ctx(c, nonce);
    if (ledger) {
        ledger->mode = "ccm";
        ledger->blocks_processed += (plaintext.size() + kBlock - 1) / kBlock;
    }

    const Bytes mac = ccm_mac(c, ctx, plaintext, tag_len, ledger);
    AeadOutput out;
    out.ciphertext.resize(plaintext.size());
    ccm_ctr(c, ctx, plaintext.data(), out.ciphertext.data(), plaintext.size(), ledger);

    const Bytes s0 = tag_mask(c, ctx, ledger);
    out.tag.resize(tag_len);
    for (std::size_t i = 0; i < tag_len; ++i) out.tag[i] = mac[i] ^ s0[i];
    return out;
}

OpenResult ccm_open(const BlockCipher& c, BytesView nonce, BytesView ciphertext, BytesView tag,
                    CallLedger* ledger) {
    check_tag_len(tag.size());
    if (ciphertext.empty()) throw std::invalid_argument("ccm_open: empty ciphertext");
    if (ciphertext.size() > 0xFFFF) throw std::invalid_argument("ccm_open: message too long for L=2");

    CcmCtx ctx(c, nonce);
    if (ledger) {
        ledger->mode = "ccm";
        ledger->blocks_processed += (ciphertext.size() + kBlock - 1) / kBlock;
    }

    Bytes plaintext(ciphertext.size());
    ccm_ctr(c, ctx, ciphertext.data(), plaintext.data(), ciphertext.size(), ledger);

    const Bytes mac = ccm_mac(c, ctx, plaintext, tag.size(), ledger);
    const Bytes s0 = tag_mask(c, ctx, ledger);

    bool valid = true;
    for (std::size_t i = 0; i < tag.size(); ++i) valid &= (tag[i] == (mac[i] ^ s0[i]));

    OpenResult res;
    res.valid = valid;
    if (valid) res.plaintext = std::move(plaintext);
    return res;
}

}  // namespace flexisec
