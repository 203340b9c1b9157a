#include "flexisec/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "flexisec/block_cipher.hpp"
#include "flexisec/hash_family.hpp"
#include "flexisec/modes.hpp"
#include "flexisec/policy.hpp"
#include "flexisec/replay.hpp"

namespace flexisec {
namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// Median-free, repetition-scaled wall clock: repeats op until the sample
// spans at least 2 ms, then averages. Only --timing rows use this.
double wall_ns(const std::function<void()>& op, std::size_t units_per_op) {
    using clock = std::chrono::steady_clock;
    op();  // warm caches and page in tables
    std::size_t reps = 1;
    for (;;) {
        const auto t0 = clock::now();
        for (std::size_t i = 0; i < reps; ++i) op();
        const auto ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
        if (ns >= 2'000'000 || reps >= (1u << 22))
            return static_cast<double>(ns) / static_cast<double>(reps * units_per_op);
        reps *= 4;
    }
}

std::unique_ptr<BlockCipher> keyed_cipher(std::string_view name, std::uint64_t seed) {
    SplitMix64 rng(seed ^ 0x7F4A7C159E3779B9ull);
    const std::size_t key_bytes = (name == "skipjack") ? 10 : 16;
    return make_cipher(name, rng.next_bytes(key_bytes));
}

}  // namespace

std::string format_metric_value(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 9.007199254740992e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return buf;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
    std::string out = "subject,metric,value,params\n";
    for (const BenchRow& r : rows) {
        out += csv_field(r.subject);
        out += ',';
        out += csv_field(r.metric);
        out += ',';
        out += format_metric_value(r.value);
        out += ',';
        out += csv_field(r.params);
        out += '\n';
    }
    return out;
}

std::vector<BenchRow> bench_ciphers(bool timing, std::uint64_t seed) {
    std::vector<BenchRow> rows;
    for (const std::string& name : cipher_names()) {
        const auto cipher = keyed_cipher(name, seed);
        const CipherSpec& cs = cipher->spec();
        const std::string params =
            "block_bits=" + std::to_string(cs.block_bits) + " key_bits=" + std::to_string(cs.key_bits);
        rows.push_back({name, "table_bytes", static_cast<double>(cs.table_bytes), params});
        if (timing) {
            SplitMix64 rng(seed);
            Bytes block = rng.next_bytes(cipher->block_bytes());
            rows.push_back({name, "wall_ns_per_block",
                            wall_ns([&] { cipher->encrypt_block(block.data()); }, 1),
                            params + " op=encrypt_block"});
        }
    }
    return rows;
}

std::vector<BenchRow> bench_modes(std::string_view cipher_name, const std::vector<std::size_t>& blocks,
                                  bool timing, std::uint64_t seed) {
    const auto cipher = keyed_cipher(cipher_name, seed);
    const std::size_t bs = cipher->block_bytes();
    const bool wide_block = bs == 16;  // the two-pass AEADs are defined for 128-bit blocks only
    SplitMix64 rng(seed);

    std::vector<BenchRow> rows;
    for (const std::size_t n : blocks) {
        if (n == 0) throw std::invalid_argument("bench_modes: block counts must be >= 1");
        const Bytes msg = rng.next_bytes(n * bs);
        const Bytes iv = rng.next_bytes(bs);
        const Bytes nonce = rng.next_bytes(wide_block ? 13 : bs);
        const std::string params = "cipher=" + std::string(cipher_name) + " blocks=" + std::to_string(n);

        struct Entry {
            const char* subject;
            std::function<void(CallLedger*)> op;
        };
        std::vector<Entry> entries;
        entries.push_back({"cbc", [&](CallLedger* led) { cbc_encrypt(*cipher, iv, msg, led); }});
        entries.push_back({"cbc_mac", [&](CallLedger* led) { cbc_mac(*cipher, msg, 8, led); }});
        entries.push_back({"cbc_cbc_mac", [&](CallLedger* led) {
                               cbc_encrypt(*cipher, iv, msg, led);
                               cbc_mac(*cipher, msg, 8, led);
                           }});
        entries.push_back({"ocb", [&](CallLedger* led) { ocb_seal(*cipher, iv, msg, 8, led); }});
        if (wide_block) {
            entries.push_back({"ccm", [&](CallLedger* led) { ccm_seal(*cipher, nonce, msg, 8, led); }});
            entries.push_back({"gcm", [&](CallLedger* led) { gcm_seal(*cipher, iv, msg, {}, 8, led); }});
        }

        for (const Entry& e : entries) {
            CallLedger led;
            e.op(&led);
            rows.push_back({e.subject, "cipher_calls",
                            static_cast<double>(led.cipher_calls + led.decrypt_calls), params});
            if (timing)
                rows.push_back({e.subject, "wall_ns_per_block", wall_ns([&] { e.op(nullptr); }, n),
                                params});
        }
    }
    return rows;
}

std::vector<BenchRow> bench_replay(std::string_view scheme_view, std::size_t nodes, unsigned window,
                                   std::size_t m_bits, std::size_t k, std::size_t fill,
                                   std::uint64_t trials, std::uint64_t seed) {
    const std::string scheme(scheme_view);
    std::vector<BenchRow> rows;
    const std::string base = "nodes=" + std::to_string(nodes) + " window=" + std::to_string(window) +
                             " m=" + std::to_string(m_bits) + " k=" + std::to_string(k);

    rows.push_back({scheme, "state_bytes",
                    static_cast<double>(replay_state_bytes(scheme, nodes, window, m_bits)),
                    base + " scope=node"});
    rows.push_back({scheme, "state_bytes",
                    static_cast<double>(replay_state_bytes_network(scheme, nodes, window, m_bits)),
                    base + " scope=network"});

    if (scheme == "bloom") {
        const std::string occ = base + " n=" + std::to_string(fill);
        rows.push_back({scheme, "fp_theoretical", fp_rate(m_bits, k, fill), occ + " form=exact"});
        rows.push_back({scheme, "fp_theoretical", fp_rate_exp(m_bits, k, fill), occ + " form=exp"});
        rows.push_back({scheme, "fp_theoretical", fp_rate_saturated(k), base + " form=saturated"});

        if (trials > 0) {
            if (k != HashFamily::k)
                throw std::invalid_argument(
                    "bench_replay: measured rates require k=" + std::to_string(HashFamily::k) +
                    " (the implemented hash family size)");
            // Fill-then-probe batches: load a fresh filter to the target
            // occupancy, then probe with tags never inserted anywhere, so
            // every hit is a true false positive at that occupancy.
            SplitMix64 rng(seed ^ 0xB5297A4D3A2E3957ull);
            std::uint64_t hits = 0;
            std::uint64_t probed = 0;
            while (probed < trials) {
                BloomState filter(m_bits, fill + 1);
                for (std::size_t i = 0; i < fill; ++i) {
                    const Bytes tag = rng.next_bytes(8);
                    filter.check_insert(tag);
                }
                const std::uint64_t batch = std::min<std::uint64_t>(256, trials - probed);
                for (std::uint64_t i = 0; i < batch; ++i) {
                    const Bytes tag = rng.next_bytes(8);
                    if (filter.query(tag)) ++hits;
                }
                probed += batch;
            }
            rows.push_back({scheme, "fp_measured",
                            static_cast<double>(hits) / static_cast<double>(trials),
                            occ + " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed)});
        }
    }
    return rows;
}

std::vector<BenchRow> bench_policy(const std::vector<int>& mac_bits, double packet_bytes,
                                   const std::vector<double>& bandwidths) {
    std::vector<BenchRow> rows;
    for (const int bits : mac_bits) {
        for (const double bw : bandwidths) {
            const std::string params = "mac_bits=" + std::to_string(bits) +
                                       " packet_bytes=" + format_metric_value(packet_bytes) +
                                       " bandwidth_bps=" + format_metric_value(bw);
            const std::string subject = "mac" + std::to_string(bits);
            rows.push_back(
                {subject, "forgery_days", forgery_days(bits, packet_bytes, bw), params + " rounding=exact"});
            rows.push_back({subject, "forgery_days", forgery_days_rounded_rate(bits, packet_bytes, bw),
                            params + " rounding=aps40"});
        }
    }
    return rows;
}

namespace {

std::string scenario_params(const Scenario& s) {
    std::ostringstream out;
    out << "mode=" << s.mode << " tier=" << s.tier;
    if (!s.cipher.empty()) out << " cipher=" << s.cipher;
    out << " replay_scheme=" << s.replay_scheme << " topology=" << s.topology;
    if (s.topology == "chain")
        out << " nodes=" << s.nodes;
    else
        out << " sources=" << s.sources;
    out << " ticks=" << s.ticks << " send_period=" << s.send_period << " send_count=" << s.send_count
        << " payload_bytes=" << s.payload_bytes << " drop_rate=" << format_metric_value(s.drop_rate)
        << " reorder_rate=" << format_metric_value(s.reorder_rate);
    if (s.adversary.kind == Adversary::Kind::capture_replay)
        out << " adversary=capture_replay adversary_delay=" << s.adversary.delay
            << " adversary_count=" << s.adversary.count;
    else
        out << " adversary=off";
    out << " seed=" << s.seed;
    return out.str();
}

}  // namespace

std::vector<BenchRow> sim_rows(const Scenario& s, const SimReport& r) {
    const std::string params = scenario_params(s);
    std::vector<BenchRow> rows;
    const auto add = [&](const char* metric, double value) {
        rows.push_back({"network", metric, value, params});
    };
    add("frames_sent", static_cast<double>(r.frames_sent));
    add("honest_sent", static_cast<double>(r.honest_sent));
    add("adversary_injected", static_cast<double>(r.adversary_injected));
    add("frames_accepted", static_cast<double>(r.frames_accepted));
    add("frames_forged", static_cast<double>(r.frames_forged));
    add("frames_replay_flagged", static_cast<double>(r.frames_replay_flagged));
    add("dropped_by_channel", static_cast<double>(r.dropped_by_channel));
    add("false_positives", static_cast<double>(r.false_positives));
    add("false_negatives", static_cast<double>(r.false_negatives));
    add("cipher_calls", static_cast<double>(r.ledger_totals.cipher_calls));
    add("decrypt_calls", static_cast<double>(r.ledger_totals.decrypt_calls));
    rows.push_back(
        {"node", "state_bytes", static_cast<double>(r.state_bytes_per_node), params + " scope=node"});
    rows.push_back({"network", "state_bytes", static_cast<double>(r.state_bytes_network),
                    params + " scope=network"});
    if (r.bloom_honest_queries > 0) {
        const double q = static_cast<double>(r.bloom_honest_queries);
        add("bloom_honest_queries", q);
        rows.push_back({"network", "fp_theoretical", r.fp_expected_sum / q, params});
        rows.push_back(
            {"network", "fp_measured", static_cast<double>(r.false_positives) / q, params});
    }
    return rows;
}

std::string sim_summary(const Scenario& s, const SimReport& r) {
    std::ostringstream out;
    out << "scenario: " << scenario_params(s) << "\n";
    out << "sent " << r.frames_sent << " (honest " << r.honest_sent << ", adversary "
        << r.adversary_injected << ")  accepted " << r.frames_accepted << "  forged "
        << r.frames_forged << "  replay_flagged " << r.frames_replay_flagged << "  channel_dropped "
        << r.dropped_by_channel << "\n";
    out << "false_positives " << r.false_positives << "  false_negatives " << r.false_negatives
        << "\n";
    out << "cipher calls: encrypt " << r.ledger_totals.cipher_calls << ", decrypt "
        << r.ledger_totals.decrypt_calls << "\n";
    if (r.state_bytes_network > 0)
        out << "replay state: " << r.state_bytes_per_node << " bytes/node, "
            << r.state_bytes_network << " network-wide\n";
    if (r.bloom_honest_queries > 0) {
        const double q = static_cast<double>(r.bloom_honest_queries);
        out << "bloom honest queries " << r.bloom_honest_queries << ": measured fp "
            << format_metric_value(static_cast<double>(r.false_positives) / q) << ", predicted "
            << format_metric_value(r.fp_expected_sum / q) << "\n";
    }
    return out.str();
}

}  // namespace flexisec
