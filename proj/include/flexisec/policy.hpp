#pragma once
// The nine-mode security policy table, the resource-tier cipher selection
// rule, and the quantitative calculators (throughput, MAC-forgery horizon,
// key-lifetime projection via key_horizon in block_cipher.hpp).

#include <array>
#include <string_view>

#include "flexisec/block_cipher.hpp"

namespace flexisec {

enum class ModeAlgo { none, sha1_digest, cbc_mac, ocb };

struct FlexiMode {
    int id = 0;                    // 1..9
    std::string_view name;         // e.g. "FlexiSecAUTH_ENC64"
    ModeAlgo algo = ModeAlgo::none;
    std::size_t tag_len = 0;       // appended MAC/digest bytes: 0, 4, 8, or 20
    bool replay = false;           // replay protection on the receive path
    bool confidentiality = false;  // payload encrypted (OCB modes)
    bool authentication = false;   // keyed MAC present
    bool unkeyed_hash = false;     // digest-only integrity (mode 2)
};

// The nine rows, in id order.
const std::array<FlexiMode, 9>& flexi_modes();

// Lookup by id 1..9 or by exact name (row 9 also answers to the variant
// without the first underscore). Throws std::invalid_argument when unknown.
const FlexiMode& select_mode(int id);
const FlexiMode& select_mode(std::string_view name);

enum class ResourceTier { low_storage_energy, high_storage_energy };

// Cipher prescription per tier; the Null mode has no cipher (throws).
std::string_view select_cipher(const FlexiMode& mode, ResourceTier tier);

// message_bits * clock_hz / cycles.
double throughput_bps(double message_bits, double clock_hz, double cycles);

// Expected days to brute-force a mac_bits MAC by blind injection on a
// bandwidth_bps link with packet_bytes-sized packets:
// 2^(mac_bits-1) * packet_bytes * 8 / (bandwidth_bps * 86400).
double forgery_days(int mac_bits, double packet_bytes, double bandwidth_bps);

// Same, but with the attempts-per-second term rounded up to the next
// multiple of 40 before dividing, the convention the prose figures use.
double forgery_days_rounded_rate(int mac_bits, double packet_bytes, double bandwidth_bps);

}  // namespace flexisec
