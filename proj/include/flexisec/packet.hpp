#pragma once
// Secured link-layer frame codec. Wire layout, all fields big-endian:
//   DEST(2) AM(1) LEN(1) SRC(2) CTR(2) | payload(0..29) | digest(20)? | mac(0/4/8)
// The 8 header bytes double as IV/nonce material (build_iv), so the sequence
// counter rides the header at no extra cost. MAC-bearing modes verify before
// any replay check; forged takes precedence over replayed, and plaintext is
// released only on accept.

#include <memory>
#include <optional>
#include <variant>

#include "flexisec/block_cipher.hpp"
#include "flexisec/bytes.hpp"
#include "flexisec/modes.hpp"
#include "flexisec/policy.hpp"
#include "flexisec/replay.hpp"

namespace flexisec {

constexpr std::size_t frame_header_bytes = 8;
constexpr std::size_t max_payload_bytes = 29;

struct FrameHeader {
    std::uint16_t dest = 0;
    std::uint8_t am = 0;   // dispatch type
    std::uint8_t len = 0;  // payload byte count, <= 29
    std::uint16_t src = 0;
    std::uint16_t ctr = 0;  // per-sender sequence counter

    bool operator==(const FrameHeader&) const = default;
};

Bytes encode_header(const FrameHeader& h);
FrameHeader decode_header(BytesView bytes);  // throws if shorter than 8 bytes

// IV/nonce from the header: the 8 serialized header bytes, used verbatim by
// 64-bit-block ciphers and zero-extended on the right for 128-bit blocks.
Bytes build_iv(const FrameHeader& h, std::size_t block_bytes);

// Receiver-side replay state; which alternative is engaged selects the
// scheme. The Bloom scheme's freshness tag is SRC||CTR (4 bytes, big-endian).
using ReplayState = std::variant<NeighborWindowTable, DigestSet, BloomState>;

Bytes bloom_tag(const FrameHeader& h);

struct SecuredFrame {
    FrameHeader header;
    Bytes payload;  // plaintext or ciphertext, per the mode
    Bytes digest;   // 20 bytes in the unkeyed-hash mode, else empty
    Bytes mac;      // tag_len bytes, empty in Null/hash modes

    Bytes wire() const;
};

enum class Verdict { accept, forged, replayed };

struct OpenedFrame {
    FrameHeader header;
    Bytes payload;  // plaintext, released only on accept
    Verdict verdict = Verdict::forged;
};

// Seals header+payload under the mode's algorithm chain. cipher may be null
// for the Null and hash modes; encrypting modes reject empty payloads
// (their AEAD needs at least one byte). header.len is overwritten with the
// payload size. Monotonicity of header.ctr is the caller's duty.
SecuredFrame seal_frame(const FlexiMode& mode, const BlockCipher* cipher, FrameHeader header,
                        BytesView payload);

// Parses and verifies a wire frame. replay is consulted only by modes with
// replay protection and must be non-null for them. Frames shorter than
// header + overhead throw; a LEN field inconsistent with the actual size
// yields a forged verdict (that is what a corrupted length byte looks like).
OpenedFrame open_frame(const FlexiMode& mode, const BlockCipher* cipher, ReplayState* replay,
                       BytesView wire_bytes);

// Frame bytes added beyond header + payload: 0, 20, 4, or 8 per mode.
std::size_t mode_overhead_bytes(const FlexiMode& mode);

}  // namespace flexisec
