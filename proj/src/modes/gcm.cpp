// Galois/Counter Mode. The MAC is GHASH over GF(2^128) with hash key
// H = E_K(0^128); payload encryption is counter mode from J0+1. Decryption
// never invokes the block cipher's inverse. Requires a 128-bit block cipher.

#include <algorithm>
#include <stdexcept>

#include "flexisec/modes.hpp"

namespace flexisec {
namespace detail {

// Right-shift bitwise multiply; X, Y, out are big-endian field elements,
// reduction polynomial bits live in R = 0xE1 << 120.
void gf128_mul(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) {
    std::uint64_t zh = 0, zl = 0;
    std::uint64_t vh = load_be64(x), vl = load_be64(x + 8);
    for (int i = 0; i < 128; ++i) {
        const std::uint8_t bit = (y[i / 8] >> (7 - i % 8)) & 1;
        if (bit) {
            zh ^= vh;
            zl ^= vl;
        }
        const bool lsb = (vl & 1) != 0;
        vl = (vl >> 1) | (vh << 63);
        vh >>= 1;
        if (lsb) vh ^= 0xE100000000000000ull;
    }
    store_be64(out, zh);
    store_be64(out + 8, zl);
}

}  // namespace detail

namespace {

constexpr std::size_t kBlock = 16;

void ghash_absorb(std::uint8_t state[kBlock], const std::uint8_t h[kBlock], BytesView data) {
    for (std::size_t off = 0; off < data.size(); off += kBlock) {
        const std::size_t n = std::min(kBlock, data.size() - off);
        for (std::size_t j = 0; j < n; ++j) state[j] ^= data[off + j];
        std::uint8_t prod[kBlock];
        detail::gf128_mul(state, h, prod);
        std::copy(prod, prod + kBlock, state);
    }
}

void ghash(const std::uint8_t h[kBlock], BytesView aad, BytesView data, std::uint8_t out[kBlock]) {
    std::fill(out, out + kBlock, 0);
    ghash_absorb(out, h, aad);
    ghash_absorb(out, h, data);
    std::uint8_t lens[kBlock];
    store_be64(lens, static_cast<std::uint64_t>(aad.size()) * 8);
    store_be64(lens + 8, static_cast<std::uint64_t>(data.size()) * 8);
    ghash_absorb(out, h, BytesView(lens, kBlock));
}

void inc32(std::uint8_t block[kBlock]) {
    store_be32(block + 12, load_be32(block + 12) + 1);
}

struct GcmCtx {
    std::uint8_t h[kBlock];
    std::uint8_t j0[kBlock];

    GcmCtx(const BlockCipher& c, BytesView iv, CallLedger* ledger) {
        if (c.block_bytes() != kBlock) throw std::invalid_argument("gcm: requires a 128-bit block cipher");
        if (iv.empty()) throw std::invalid_argument("gcm: empty iv");
        std::fill(h, h + kBlock, 0);
        c.encrypt_block(h);
        if (ledger) ++ledger->cipher_calls;
        if (iv.size() == 12) {
            std::copy(iv.begin(), iv.end(), j0);
            j0[12] = j0[13] = j0[14] = 0;
            j0[15] = 1;
        } else {
            ghash(h, BytesView{}, iv, j0);
        }
    }
};

void gctr(const BlockCipher& c, const std::uint8_t start[kBlock], const std::uint8_t* in, std::uint8_t* out,
          std::size_t len, CallLedger* ledger) {
    std::uint8_t counter[kBlock];
    std::copy(start, start + kBlock, counter);
    for (std::size_t off = 0; off < len; off += kBlock) {
        inc32(counter);
        std::uint8_t ks[kBlock];
        std::copy(counter, counter + kBlock, ks);
        c.encrypt_block(ks);
        if (ledger) ++ledger->cipher_calls;
        const std::size_t n = std::min(kBlock, len - off);
        for (std::size_t j = 0; j < n; ++j) out[off + j] = in[off + j] ^ ks[j];
    }
}

Bytes gcm_tag(const BlockCipher& c, const GcmCtx& ctx, BytesView aad, BytesView ciphertext,
              std::size_t tag_len, CallLedger* ledger) {
    std::uint8_t s[kBlock];
    ghash(ctx.h, aad, ciphertext, s);
    std::uint8_t mask[kBlock];
    std::copy(ctx.j0, ctx.j0 + kBlock, mask);
    c.encrypt_block(mask);
    if (ledger) ++ledger->cipher_calls;
    Bytes tag(tag_len);
    for (std::size_t i = 0; i < tag_len; ++i) tag[i] = s[i] ^ mask[i];
    return tag;
}

void check_tag_len(std::size_t tag_len) {
    if (tag_len != 4 && tag_len != 8) throw std::invalid_argument("gcm: tag_len must be 4 or 8");
}

}  // namespace

AeadOutput gcm_seal(const BlockCipher& c, BytesView iv, BytesView plaintext, BytesView aad,
                    std::size_t tag_len, CallLedger* ledger) {
    check_tag_len(tag_len);
    if (ledger) {
        ledger->mode = "gcm";
        ledger->blocks_processed += (plaintext.size() + kBlock - 1) / kBlock;
    }
    GcmCtx ctx(c, iv, ledger);
    AeadOutput out;
    out.ciphertext.resize(plaintext.size());
    gctr(c, ctx.j0, plaintext.data(), out.ciphertext.data(), plaintext.size(), ledger);
    out.tag = gcm_tag(c, ctx, aad, out.ciphertext, tag_len, ledger);
    return out;
}

OpenResult gcm_open(const BlockCipher& c, BytesView iv, BytesView ciphertext, BytesView aad, BytesView tag,
                    CallLedger* ledger) {
    check_tag_len(tag.size());
    if (ledger) {
        ledger->mode = "gcm";
        ledger->blocks_processed += (ciphertext.size() + kBlock - 1) / kBlock;
    }
    GcmCtx ctx(c, iv, ledger);
    const Bytes expect = gcm_tag(c, ctx, aad, ciphertext, tag.size(), ledger);

    OpenResult res;
    res.valid = std::equal(expect.begin(), expect.end(), tag.begin());
    if (res.valid) {
        res.plaintext.resize(ciphertext.size());
        gctr(c, ctx.j0, ciphertext.data(), res.plaintext.data(), ciphertext.size(), ledger);
    }
    return res;
}

}  // namespace flexisec
