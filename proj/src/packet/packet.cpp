#include "flexisec/packet.hpp"

#include <algorithm>
#include <stdexcept>

namespace flexisec {
namespace {

// MAC input for the CBC-MAC modes: header || payload-as-transmitted. The
// OCB modes bind the header through the nonce instead (their one-pass tag
// has no separate associated-data channel).
Bytes mac_input(const FrameHeader& h, BytesView payload) {
    Bytes data = encode_header(h);
    data.insert(data.end(), payload.begin(), payload.end());
    return data;
}

void require_cipher(const BlockCipher* cipher, const FlexiMode& mode) {
    if (!cipher)
        throw std::invalid_argument(std::string("seal/open: mode ") + std::string(mode.name) +
                                    " requires a cipher");
}

Freshness run_replay_check(ReplayState& state, const FrameHeader& h, BytesView wire_bytes) {
    return std::visit(
        [&](auto& scheme) -> Freshness {
            using T = std::decay_t<decltype(scheme)>;
            if constexpr (std::is_same_v<T, NeighborWindowTable>) {
                return scheme.check(h.src, h.ctr);
            } else if constexpr (std::is_same_v<T, DigestSet>) {
                return scheme.check(h.src, wire_bytes);
            } else {
                const Bytes tag = bloom_tag(h);
                return scheme.check_insert(tag);
            }
        },
        state);
}

}  // namespace

Bytes encode_header(const FrameHeader& h) {
    Bytes out(frame_header_bytes);
    store_be16(out.data(), h.dest);
    out[2] = h.am;
    out[3] = h.len;
    store_be16(out.data() + 4, h.src);
    store_be16(out.data() + 6, h.ctr);
    return out;
}

FrameHeader decode_header(BytesView bytes) {
    if (bytes.size() < frame_header_bytes) throw std::invalid_argument("decode_header: truncated header");
    FrameHeader h;
    h.dest = load_be16(bytes.data());
    h.am = bytes[2];
    h.len = bytes[3];
    h.src = load_be16(bytes.data() + 4);
    h.ctr = load_be16(bytes.data() + 6);
    return h;
}

Bytes build_iv(const FrameHeader& h, std::size_t block_bytes) {
    if (block_bytes != 8 && block_bytes != 16)
        throw std::invalid_argument("build_iv: block size must be 8 or 16 bytes");
    Bytes iv(block_bytes, 0);
    const Bytes header = encode_header(h);
    std::copy(header.begin(), header.end(), iv.begin());
    return iv;
}

Bytes bloom_tag(const FrameHeader& h) {
    Bytes tag(4);
    store_be16(tag.data(), h.src);
    store_be16(tag.data() + 2, h.ctr);
    return tag;
}

Bytes SecuredFrame::wire() const {
    Bytes out = encode_header(header);
    out.insert(out.end(), payload.begin(), payload.end());
    out.insert(out.end(), digest.begin(), digest.end());
    out.insert(out.end(), mac.begin(), mac.end());
    return out;
}

std::size_t mode_overhead_bytes(const FlexiMode& mode) { return mode.tag_len; }

SecuredFrame seal_frame(const FlexiMode& mode, const BlockCipher* cipher, FrameHeader header,
                        BytesView payload) {
    if (payload.size() > max_payload_bytes) throw std::invalid_argument("seal_frame: payload too long");
    header.len = static_cast<std::uint8_t>(payload.size());

    SecuredFrame frame;
    frame.header = header;

    switch (mode.algo) {
        case ModeAlgo::none:
            frame.payload.assign(payload.begin(), payload.end());
            break;
        case ModeAlgo::sha1_digest: {
            frame.payload.assign(payload.begin(), payload.end());
            const auto d = sha1(mac_input(header, payload));
            frame.digest.assign(d.begin(), d.end());
            break;
        }
        case ModeAlgo::cbc_mac: {
            require_cipher(cipher, mode);
            frame.payload.assign(payload.begin(), payload.end());
            frame.mac = cbc_mac(*cipher, mac_input(header, payload), mode.tag_len);
            break;
        }
        case ModeAlgo::ocb: {
            require_cipher(cipher, mode);
            if (payload.empty())
                throw std::invalid_argument("seal_frame: encrypting modes need a non-empty payload");
            const Bytes nonce = build_iv(header, cipher->block_bytes());
            AeadOutput sealed = ocb_seal(*cipher, nonce, payload, mode.tag_len);
            frame.payload = std::move(sealed.ciphertext);
            frame.mac = std::move(sealed.tag);
            break;
        }
    }
    return frame;
}

OpenedFrame open_frame(const FlexiMode& mode, const BlockCipher* cipher, ReplayState* replay,
                       BytesView wire_bytes) {
    const std::size_t overhead = mode_overhead_bytes(mode);
    if (wire_bytes.size() < frame_header_bytes + overhead)
        throw std::invalid_argument("open_frame: truncated frame");

    OpenedFrame out;
    out.header = decode_header(wire_bytes);
    out.verdict = Verdict::forged;

    // A total length inconsistent with LEN is a corruption, not a usage
    // error: report it as forged.
    if (wire_bytes.size() != frame_header_bytes + out.header.len + overhead) return out;

    const BytesView body = wire_bytes.subspan(frame_header_bytes, out.header.len);
    const BytesView trailer = wire_bytes.subspan(frame_header_bytes + out.header.len);

    Bytes plaintext;
    switch (mode.algo) {
        case ModeAlgo::none:
            plaintext.assign(body.begin(), body.end());
            break;
        case ModeAlgo::sha1_digest: {
            const auto expect = sha1(mac_input(out.header, body));
            if (!std::equal(expect.begin(), expect.end(), trailer.begin())) return out;
            plaintext.assign(body.begin(), body.end());
            break;
        }
        case ModeAlgo::cbc_mac: {
            require_cipher(cipher, mode);
            const Bytes expect = cbc_mac(*cipher, mac_input(out.header, body), mode.tag_len);
            if (!std::equal(expect.begin(), expect.end(), trailer.begin())) return out;
            plaintext.assign(body.begin(), body.end());
            break;
        }
        case ModeAlgo::ocb: {
            require_cipher(cipher, mode);
            if (body.empty()) return out;  // encrypting modes never seal empty payloads
            const Bytes nonce = build_iv(out.header, cipher->block_bytes());
            OpenResult opened = ocb_open(*cipher, nonce, body, trailer);
            if (!opened.valid) return out;
            plaintext = std::move(opened.plaintext);
            break;
        }
    }

    if (mode.replay) {
        if (!replay) throw std::invalid_argument("open_frame: replay-protected mode needs replay state");
        if (run_replay_check(*replay, out.header, wire_bytes) == Freshness::replayed) {
            out.verdict = Verdict::replayed;
            return out;
        }
    }

    out.verdict = Verdict::accept;
    out.payload = std::move(plaintext);
    return out;
}

}  // namespace flexisec
