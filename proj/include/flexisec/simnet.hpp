#pragma once
// Deterministic tick-driven simulator of a multi-hop unicast sensor network
// carrying secured link-layer frames. Every hop verifies and reseals
// (link-layer semantics: a relay opens the frame, then re-MACs/re-encrypts
// it under its own source id and send counter). An optional adversary taps
// the first link, captures one frame, and re-injects verbatim copies.
// Identical (Scenario, seed) pairs produce identical reports.

#include <cstdint>
#include <string>

#include "flexisec/config.hpp"
#include "flexisec/modes.hpp"

namespace flexisec {

struct Adversary {
    enum class Kind { off, capture_replay };
    Kind kind = Kind::off;
    std::uint64_t delay = 0;  // ticks between the capture and the first re-injection
    std::uint64_t count = 0;  // verbatim re-injections, one per tick
};

struct Scenario {
    std::string mode = "FlexiSecAUTH_REPP64";  // policy table row, by name or numeric id
    std::string tier = "high";                 // low|high, picks the cipher when `cipher` is empty
    std::string cipher;                        // explicit cipher name, overrides the tier rule
    std::string replay_scheme = "counter";     // counter|digest|bloom (used when the mode has replay)
    unsigned counter_window = 16;
    unsigned digest_window = 8;
    std::size_t bloom_m = 512;
    std::size_t bloom_capacity = 256;

    std::string topology = "chain";  // chain|star
    unsigned nodes = 4;              // chain: total node count, source..relays..sink
    unsigned sources = 2;            // star: source count; total nodes = sources + hub + sink

    std::uint64_t ticks = 64;        // sends happen while tick < ticks; in-flight frames drain after
    std::uint64_t send_period = 1;   // each source sends every send_period ticks
    std::uint64_t send_count = 0;    // per-source send budget; 0 = bounded by ticks only
    std::size_t payload_bytes = 16;  // 0..29; must be nonzero for encrypting modes
    double drop_rate = 0.0;          // per-transmission channel loss probability
    double reorder_rate = 0.0;       // probability of swapping a frame with its queue predecessor
    std::uint64_t seed = 1;
    Adversary adversary;

    // Reads the key=value scenario schema (see scenarios/ for examples);
    // rejects unknown keys. Throws std::runtime_error on bad input.
    static Scenario from_config(const Config& cfg);
};

struct SimReport {
    // Conservation: frames_sent = frames_accepted + frames_forged +
    // frames_replay_flagged + dropped_by_channel (each injected frame ends
    // in exactly one bucket; relays forward without re-counting).
    std::uint64_t frames_sent = 0;  // honest sends + adversary injections
    std::uint64_t honest_sent = 0;
    std::uint64_t adversary_injected = 0;
    std::uint64_t frames_accepted = 0;  // delivered at the sink
    std::uint64_t frames_forged = 0;
    std::uint64_t frames_replay_flagged = 0;
    std::uint64_t dropped_by_channel = 0;

    std::uint64_t false_positives = 0;  // honest frames flagged as replayed
    std::uint64_t false_negatives = 0;  // adversary injections accepted at the tapped hop

    CallLedger ledger_totals;  // block-cipher invocations across every node

    std::size_t state_bytes_per_node = 0;  // analytic replay-state footprint
    std::size_t state_bytes_network = 0;

    // Predicted false-positive mass over the honest Bloom queries actually
    // made: sum of per-query probabilities at the filter occupancy each
    // query observed, and the matching binomial variance. Zero for the
    // counter and digest schemes.
    std::uint64_t bloom_honest_queries = 0;
    double fp_expected_sum = 0.0;
    double fp_expected_var = 0.0;
};

// Runs the scenario to completion (send window, then drain). Throws
// std::invalid_argument on malformed scenarios (zero ticks, unknown
// topology, oversized payload) and std::overflow_error if a node exhausts
// its 16-bit send counter.
SimReport run_scenario(const Scenario& s);

}  // namespace flexisec
