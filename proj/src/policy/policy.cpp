#include "flexisec/policy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace flexisec {

const std::array<FlexiMode, 9>& flexi_modes() {
    // id, name, algo, tag_len, replay, confidentiality, authentication, unkeyed_hash
    static const std::array<FlexiMode, 9> rows = {{
        {1, "Null", ModeAlgo::none, 0, false, false, false, false},
        {2, "FlexiSecHASH", ModeAlgo::sha1_digest, 20, false, false, false, true},
        {3, "FlexiSecAUTH64", ModeAlgo::cbc_mac, 8, false, false, true, false},
        {4, "FlexiSecAUTH32", ModeAlgo::cbc_mac, 4, false, false, true, false},
        {5, "FlexiSecAUTH_ENC64", ModeAlgo::ocb, 8, false, true, true, false},
        {6, "FlexiSecAUTH_ENC32", ModeAlgo::ocb, 4, false, true, true, false},
        {7, "FlexiSecAUTH_REPP64", ModeAlgo::cbc_mac, 8, true, false, true, false},
        {8, "FlexiSecAUTH_REPP32", ModeAlgo::cbc_mac, 4, true, false, true, false},
        {9, "FlexiSec_AUTH_ENC_REPP64", ModeAlgo::ocb, 8, true, true, true, false},
    }};
    return rows;
}

const FlexiMode& select_mode(int id) {
    if (id < 1 || id > 9) throw std::invalid_argument("select_mode: id must be 1..9");
    return flexi_modes()[static_cast<std::size_t>(id - 1)];
}

const FlexiMode& select_mode(std::string_view name) {
    for (const FlexiMode& m : flexi_modes())
        if (m.name == name) return m;
    if (name == "FlexiSecAUTH_ENC_REPP64") return flexi_modes()[8];
    throw std::invalid_argument("select_mode: unknown mode " + std::string(name));
}

std::string_view select_cipher(const FlexiMode& mode, ResourceTier tier) {
    if (mode.algo == ModeAlgo::none)
        throw std::invalid_argument("select_cipher: the Null mode has no cipher");
    return tier == ResourceTier::low_storage_energy ? "xxtea_opt" : "aes_speed";
}

double throughput_bps(double message_bits, double clock_hz, double cycles) {
    if (cycles <= 0) throw std::invalid_argument("throughput_bps: cycles must be positive");
    return message_bits * clock_hz / cycles;
}

double forgery_days(int mac_bits, double packet_bytes, double bandwidth_bps) {
    if (mac_bits < 1) throw std::invalid_argument("forgery_days: mac_bits must be >= 1");
    if (bandwidth_bps <= 0) throw std::invalid_argument("forgery_days: bandwidth must be positive");
    const double attempts = std::pow(2.0, mac_bits - 1);  // expected tries to hit one MAC
    const double seconds_per_attempt = packet_bytes * 8.0 / bandwidth_bps;
    return attempts * seconds_per_attempt / 86400.0;
}

double forgery_days_rounded_rate(int mac_bits, double packet_bytes, double bandwidth_bps) {
    if (mac_bits < 1) throw std::invalid_argument("forgery_days_rounded_rate: mac_bits must be >= 1");
    if (bandwidth_bps <= 0)
        throw std::invalid_argument("forgery_days_rounded_rate: bandwidth must be positive");
    const double attempts_per_second = bandwidth_bps / (packet_bytes * 8.0);
    const double rounded = std::ceil(attempts_per_second / 40.0) * 40.0;
    return std::pow(2.0, mac_bits - 1) / rounded / 86400.0;
}

}  // namespace flexisec
