// One-pass authenticated encryption in the two-sided-whitening style.
// Offsets: L = E_K(0^b), O_i = L*x^i in GF(2^b) by repeated doubling
// (reduction 0x1B for 64-bit blocks, 0x87 for 128-bit). The nonce is
// zero-padded to a block and folded into every whitening term, binding it
// to ciphertext and tag. Block i: C_i = E_K(M_i ^ O_i ^ N) ^ O_i ^ N;
// a short final block is masked CTR-style with E_K(O_n ^ N) so ciphertext
// length equals plaintext length. Tag = E_K(checksum ^ O_{n+1} ^ N)
// truncated, checksum = XOR of zero-padded plaintext blocks.
// Exactly N+2 block-cipher calls for an N-block message.

#include <algorithm>
#include <stdexcept>

#include "flexisec/modes.hpp"

namespace flexisec {
namespace {

void double_offset(Bytes& o) {
    if (o.size() == 8) {
        std::uint64_t v = load_be64(o.data());
        const bool carry = (v >> 63) != 0;
        v <<= 1;
        if (carry) v ^= 0x1B;
        store_be64(o.data(), v);
    } else {
        std::uint64_t hi = load_be64(o.data());
        std::uint64_t lo = load_be64(o.data() + 8);
        const bool carry = (hi >> 63) != 0;
        hi = (hi << 1) | (lo >> 63);
        lo <<= 1;
        if (carry) lo ^= 0x87;
        store_be64(o.data(), hi);
        store_be64(o.data() + 8, lo);
    }
}

Bytes padded_nonce(BytesView nonce, std::size_t bs) {
    if (nonce.size() > bs) throw std::invalid_argument("ocb: nonce longer than the cipher block");
    Bytes n(bs, 0);
    std::copy(nonce.begin(), nonce.end(), n.begin());
    return n;
}

struct OcbCore {
    const BlockCipher& c;
    CallLedger* ledger;
    std::size_t bs;
    Bytes nonce;
    Bytes offset;    // O_i, advanced by doubling
    Bytes checksum;  // XOR of zero-padded plaintext blocks

    OcbCore(const BlockCipher& cipher, BytesView nonce_in, CallLedger* led)
        : c(cipher), ledger(led), bs(cipher.block_bytes()), nonce(padded_nonce(nonce_in, bs)),
          offset(bs, 0), checksum(bs, 0) {
        c.encrypt_block(offset.data());  // L = E_K(0^b)
        if (ledger) ++ledger->cipher_calls;
        double_offset(offset);  // O_1
    }

    void encrypt_call(std::uint8_t* block) {
        c.encrypt_block(block);
        if (ledger) ++ledger->cipher_calls;
    }

    void decrypt_call(std::uint8_t* block) {
        c.decrypt_block(block);
        if (ledger) ++ledger->decrypt_calls;
    }

    Bytes tag(std::size_t tag_len) {
        // offset has been advanced to O_{n+1} by the block loop.
        Bytes t = checksum;
        xor_into(t.data(), offset.data(), bs);
        xor_into(t.data(), nonce.data(), bs);
        encrypt_call(t.data());
        t.resize(tag_len);
        return t;
    }
};

}  // namespace

AeadOutput ocb_seal(const BlockCipher& c, BytesView nonce, BytesView plaintext, std::size_t tag_len,
                    CallLedger* ledger) {
    if (tag_len != 4 && tag_len != 8) throw std::invalid_argument("ocb_seal: tag_len must be 4 or 8");
    if (plaintext.empty()) throw std::invalid_argument("ocb_seal: empty plaintext");

    const std::size_t bs = c.block_bytes();
    const std::size_t nblocks = (plaintext.size() + bs - 1) / bs;
    if (ledger) {
        ledger->mode = "ocb";
        ledger->blocks_processed += nblocks;
    }

    OcbCore core(c, nonce, ledger);
    AeadOutput out;
    out.ciphertext.resize(plaintext.size());

    for (std::size_t i = 0; i < nblocks; ++i) {
        const std::size_t off = i * bs;
        const std::size_t n = std::min(bs, plaintext.size() - off);

        Bytes m(bs, 0);
        std::copy(plaintext.begin() + static_cast<std::ptrdiff_t>(off),
                  plaintext.begin() + static_cast<std::ptrdiff_t>(off + n), m.begin());
        xor_into(core.checksum.data(), m.data(), bs);

        if (n == bs) {
            xor_into(m.data(), core.offset.data(), bs);
            xor_into(m.data(), core.nonce.data(), bs);
            core.encrypt_call(m.data());
            xor_into(m.data(), core.offset.data(), bs);
            xor_into(m.data(), core.nonce.data(), bs);
            std::copy(m.begin(), m.end(), out.ciphertext.begin() + static_cast<std::ptrdiff_t>(off));
        } else {
            Bytes pad = core.offset;
            xor_into(pad.data(), core.nonce.data(), bs);
            core.encrypt_call(pad.data());
            for (std::size_t j = 0; j < n; ++j) out.ciphertext[off + j] = plaintext[off + j] ^ pad[j];
        }
        double_offset(core.offset);
    }

    out.tag = core.tag(tag_len);
    return out;
}

OpenResult ocb_open(const BlockCipher& c, BytesView nonce, BytesView ciphertext, BytesView tag,
                    CallLedger* ledger) {
    if (tag.size() != 4 && tag.size() != 8) throw std::invalid_argument("ocb_open: tag must be 4 or 8 bytes");
    if (ciphertext.empty()) throw std::invalid_argument("ocb_open: empty ciphertext");

    const std::size_t bs = c.block_bytes();
    const std::size_t nblocks = (ciphertext.size() + bs - 1) / bs;
    if (ledger) {
        ledger->mode = "ocb";
        ledger->blocks_processed += nblocks;
    }

    OcbCore core(c, nonce, ledger);
    Bytes plaintext(ciphertext.size());

    for (std::size_t i = 0; i < nblocks; ++i) {
        const std::size_t off = i * bs;
        const std::size_t n = std::min(bs, ciphertext.size() - off);

        Bytes m(bs, 0);
        if (n == bs) {
            std::copy(ciphertext.begin() + static_cast<std::ptrdiff_t>(off),
                      ciphertext.begin() + static_cast<std::ptrdiff_t>(off + n), m.begin());
            xor_into(m.data(), core.offset.data(), bs);
            xor_into(m.data(), core.nonce.data(), bs);
            core.decrypt_call(m.data());
            xor_into(m.data(), core.offset.data(), bs);
            xor_into(m.data(), core.nonce.data(), bs);
        } else {
            Bytes pad = core.offset;
            xor_into(pad.data(), core.nonce.data(), bs);
            core.encrypt_call(pad.data());
            for (std::size_t j = 0; j < n; ++j) m[j] = ciphertext[off + j] ^ pad[j];
        }
        std::copy(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(n),
                  plaintext.begin() + static_cast<std::ptrdiff_t>(off));
        xor_into(core.checksum.data(), m.data(), bs);
        double_offset(core.offset);
    }

    const Bytes expect = core.tag(tag.size());
    OpenResult res;
    res.valid = std::equal(expect.begin(), expect.end(), tag.begin());
    if (res.valid) res.plaintext = std::move(plaintext);  // withheld on forgery
    return res;
}

}  // namespace flexisec
