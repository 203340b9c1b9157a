#include "flexisec/simnet.hpp"

#include <cctype>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "flexisec/packet.hpp"
#include "flexisec/policy.hpp"
#include "flexisec/replay.hpp"

namespace flexisec {
namespace {

constexpr std::uint8_t kAmType = 0x2A;  // fixed dispatch byte for sim traffic

// Counts raw block operations on behalf of the whole network; the report's
// energy proxy is this total, so the counter must sit below every mode.
class CountingCipher final : public BlockCipher {
  public:
    explicit CountingCipher(const BlockCipher& inner) : BlockCipher(inner.spec()), inner_(inner) {}

    std::uint64_t encrypt_calls() const { return enc_; }
    std::uint64_t decrypt_calls() const { return dec_; }

  protected:
    void do_encrypt(std::uint8_t* block) const override {
        ++enc_;
        inner_.encrypt_block(block);
    }
    void do_decrypt(std::uint8_t* block) const override {
        ++dec_;
        inner_.decrypt_block(block);
    }

  private:
    const BlockCipher& inner_;
    mutable std::uint64_t enc_ = 0;
    mutable std::uint64_t dec_ = 0;
};

struct Frame {
    Bytes wire;
    bool adversarial = false;  // true only for the adversary's own injections
};

struct Link {
    std::uint16_t from = 0;
    std::uint16_t to = 0;
    std::deque<Frame> queue;
};

enum class Role { source, relay, sink };

struct Node {
    std::uint16_t id = 0;
    Role role = Role::relay;
    int out_link = -1;  // index into the link table; -1 for the sink
    std::uint16_t send_ctr = 0;
    std::optional<ReplayState> replay;  // engaged on receiving nodes when the mode has replay
};

const FlexiMode& resolve_mode(const std::string& spec_text) {
    bool all_digits = !spec_text.empty();
    for (const char ch : spec_text)
        if (!std::isdigit(static_cast<unsigned char>(ch))) all_digits = false;
    if (all_digits) return select_mode(std::stoi(spec_text));
    return select_mode(spec_text);
}

class Sim {
  public:
    explicit Sim(const Scenario& s) : s_(s), mode_(&resolve_mode(s.mode)), channel_(s.seed) {
        validate();
        build_topology();
        if (mode_->algo != ModeAlgo::none) {
            const std::string name = resolve_cipher_name();
            // Uniform global keying: one key for the whole network, derived
            // from the scenario seed.
            SplitMix64 keygen(s_.seed ^ 0x9D39247E33776D41ull);
            const std::size_t key_bytes = (name == "skipjack") ? 10 : 16;
            cipher_ = make_cipher(name, keygen.next_bytes(key_bytes));
            counting_.emplace(*cipher_);
        }
        for (const std::uint16_t id : source_ids_)
            payload_rng_.emplace_back(s_.seed ^ (0xD1B54A32D192ED03ull + id));
    }

    SimReport run() {
        for (std::uint64_t tick = 0; !finished(tick); ++tick) {
            tick_now_ = tick;
            deliver();
            if (tick < s_.ticks && tick % s_.send_period == 0) send_honest();
            inject(tick);
        }
        finalize();
        return report_;
    }

  private:
    void validate() const {
        if (s_.ticks == 0) throw std::invalid_argument("run_scenario: zero ticks");
        if (s_.send_period == 0) throw std::invalid_argument("run_scenario: send_period must be >= 1");
        if (s_.payload_bytes > max_payload_bytes)
            throw std::invalid_argument("run_scenario: payload_bytes must be <= 29");
        if (mode_->confidentiality && s_.payload_bytes == 0)
            throw std::invalid_argument("run_scenario: encrypting modes need a nonzero payload");
        if (s_.drop_rate < 0.0 || s_.drop_rate > 1.0 || s_.reorder_rate < 0.0 || s_.reorder_rate > 1.0)
            throw std::invalid_argument("run_scenario: rates must lie in [0, 1]");
        if (s_.topology == "chain") {
            if (s_.nodes < 2) throw std::invalid_argument("run_scenario: a chain needs >= 2 nodes");
        } else if (s_.topology == "star") {
            if (s_.sources < 1) throw std::invalid_argument("run_scenario: a star needs >= 1 source");
        } else {
            throw std::invalid_argument("run_scenario: unknown topology " + s_.topology);
        }
    }

    std::string resolve_cipher_name() const {
        if (!s_.cipher.empty()) return s_.cipher;
        if (s_.tier == "low") return std::string(select_cipher(*mode_, ResourceTier::low_storage_energy));
        if (s_.tier == "high") return std::string(select_cipher(*mode_, ResourceTier::high_storage_energy));
        throw std::invalid_argument("run_scenario: tier must be low or high");
    }

    ReplayState make_replay_state() const {
        if (s_.replay_scheme == "counter")
            return NeighborWindowTable(s_.counter_window, nodes_.size());
        if (s_.replay_scheme == "digest") return DigestSet(s_.digest_window, nodes_.size());
        if (s_.replay_scheme == "bloom") return BloomState(s_.bloom_m, s_.bloom_capacity);
        throw std::invalid_argument("run_scenario: unknown replay scheme " + s_.replay_scheme);
    }

    void build_topology() {
        if (s_.topology == "chain") {
            const unsigned total = s_.nodes;
            for (unsigned i = 1; i <= total; ++i) {
                Node n;
                n.id = static_cast<std::uint16_t>(i);
                n.role = (i == 1) ? Role::source : (i == total) ? Role::sink : Role::relay;
                n.out_link = (i < total) ? static_cast<int>(i - 1) : -1;
                nodes_.push_back(std::move(n));
            }
            for (unsigned i = 1; i < total; ++i)
                links_.push_back(Link{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(i + 1), {}});
            source_ids_.push_back(1);
        } else {  // star: sources 1..S feed a hub (S+1) that forwards to the sink (S+2)
            const unsigned srcs = s_.sources;
            const std::uint16_t hub = static_cast<std::uint16_t>(srcs + 1);
            const std::uint16_t sink = static_cast<std::uint16_t>(srcs + 2);
            for (unsigned i = 1; i <= srcs; ++i) {
                Node n;
                n.id = static_cast<std::uint16_t>(i);
                n.role = Role::source;
                n.out_link = static_cast<int>(i - 1);
                source_ids_.push_back(n.id);
                nodes_.push_back(std::move(n));
            }
            Node hub_node;
            hub_node.id = hub;
            hub_node.role = Role::relay;
            hub_node.out_link = static_cast<int>(srcs);
            nodes_.push_back(std::move(hub_node));
            Node sink_node;
            sink_node.id = sink;
            sink_node.role = Role::sink;
            nodes_.push_back(std::move(sink_node));
            for (unsigned i = 1; i <= srcs; ++i) links_.push_back(Link{static_cast<std::uint16_t>(i), hub, {}});
            links_.push_back(Link{hub, sink, {}});
        }
        if (mode_->replay)
            for (Node& n : nodes_)
                if (n.role != Role::source) n.replay.emplace(make_replay_state());
        sent_by_source_.assign(source_ids_.size(), 0);
    }

    Node& node_of(std::uint16_t id) { return nodes_.at(id - 1); }

    const BlockCipher* cipher() const { return counting_ ? &*counting_ : nullptr; }

    bool queues_empty() const {
        for (const Link& l : links_)
            if (!l.queue.empty()) return false;
        return true;
    }

    bool sends_remaining(std::uint64_t tick) const {
        if (tick >= s_.ticks) return false;
        if (s_.send_count == 0) return true;
        for (const std::uint64_t sent : sent_by_source_)
            if (sent < s_.send_count) return true;
        return false;
    }

    bool adversary_pending(std::uint64_t tick) const {
        if (s_.adversary.kind != Adversary::Kind::capture_replay) return false;
        if (injected_ >= s_.adversary.count) return false;
        return captured_ || sends_remaining(tick);
    }

    bool finished(std::uint64_t tick) const {
        return tick >= s_.ticks && queues_empty() && !adversary_pending(tick) && !sends_remaining(tick);
    }

    std::uint16_t next_ctr(Node& n) {
        if (n.send_ctr == 0xFFFF)
            throw std::overflow_error("run_scenario: send counter exhausted at node " +
                                      std::to_string(n.id));
        return ++n.send_ctr;
    }

    void transmit(std::size_t link_index, Frame f) {
        Link& link = links_[link_index];
        if (link_index == 0 && !f.adversarial) capture(f);
        // Channel draws depend only on the transmission sequence, never on
        // frame bytes, so swapping ciphers or modes cannot perturb loss.
        if (channel_.next_unit() < s_.drop_rate) {
            ++report_.dropped_by_channel;
            return;
        }
        link.queue.push_back(std::move(f));
        if (s_.reorder_rate > 0.0 && channel_.next_unit() < s_.reorder_rate && link.queue.size() >= 2)
            std::swap(link.queue[link.queue.size() - 1], link.queue[link.queue.size() - 2]);
    }

    void capture(const Frame& f) {
        if (s_.adversary.kind != Adversary::Kind::capture_replay || captured_) return;
        captured_ = true;
        capture_tick_ = tick_now_;
        captured_wire_ = f.wire;
    }

    void deliver() {
        for (Link& link : links_) {
            if (link.queue.empty()) continue;  // one frame per link per tick
            Frame f = std::move(link.queue.front());
            link.queue.pop_front();
            receive(node_of(link.to), std::move(f));
        }
    }

    void receive(Node& n, Frame f) {
        ReplayState* rs = n.replay ? &*n.replay : nullptr;
        if (rs && !f.adversarial) {
            // Record the prediction this honest query faces, at the
            // occupancy the filter has right now.
            if (const auto* b = std::get_if<BloomState>(rs)) {
                const double p = fp_rate(b->m_bits(), BloomState::k_hashes, b->inserted());
                ++report_.bloom_honest_queries;
                report_.fp_expected_sum += p;
                report_.fp_expected_var += p * (1.0 - p);
            }
        }
        const OpenedFrame opened = open_frame(*mode_, cipher(), rs, f.wire);
        switch (opened.verdict) {
            case Verdict::forged:
                ++report_.frames_forged;
                return;
            case Verdict::replayed:
                ++report_.frames_replay_flagged;
                if (!f.adversarial) ++report_.false_positives;
                return;
            case Verdict::accept:
                break;
        }
        if (f.adversarial) ++report_.false_negatives;
        if (n.role == Role::sink) {
            ++report_.frames_accepted;
            return;
        }
        send_from(n, opened.payload);  // verify-then-reseal toward the next hop
    }

    void send_from(Node& n, BytesView payload) {
        FrameHeader h;
        h.dest = links_[static_cast<std::size_t>(n.out_link)].to;
        h.am = kAmType;
        h.src = n.id;
        h.ctr = next_ctr(n);
        const SecuredFrame sealed = seal_frame(*mode_, cipher(), h, payload);
        transmit(static_cast<std::size_t>(n.out_link), Frame{sealed.wire(), false});
    }

    void send_honest() {
        for (std::size_t i = 0; i < source_ids_.size(); ++i) {
            if (s_.send_count != 0 && sent_by_source_[i] >= s_.send_count) continue;
            const Bytes payload = payload_rng_[i].next_bytes(s_.payload_bytes);
            send_from(node_of(source_ids_[i]), payload);
            ++sent_by_source_[i];
            ++report_.honest_sent;
            ++report_.frames_sent;
        }
    }

    void inject(std::uint64_t tick) {
        if (s_.adversary.kind != Adversary::Kind::capture_replay) return;
        if (!captured_ || injected_ >= s_.adversary.count) return;
        if (tick < capture_tick_ + s_.adversary.delay) return;
        transmit(0, Frame{captured_wire_, true});
        ++injected_;
        ++report_.adversary_injected;
        ++report_.frames_sent;
    }

    void finalize() {
        report_.ledger_totals.mode = std::string(mode_->name);
        if (counting_) {
            report_.ledger_totals.cipher_calls = counting_->encrypt_calls();
            report_.ledger_totals.decrypt_calls = counting_->decrypt_calls();
            report_.ledger_totals.blocks_processed =
                counting_->encrypt_calls() + counting_->decrypt_calls();
        }
        if (mode_->replay) {
            const unsigned window =
                (s_.replay_scheme == "digest") ? s_.digest_window : s_.counter_window;
            report_.state_bytes_per_node =
                replay_state_bytes(s_.replay_scheme, nodes_.size(), window, s_.bloom_m);
            report_.state_bytes_network =
                replay_state_bytes_network(s_.replay_scheme, nodes_.size(), window, s_.bloom_m);
        }
    }

    const Scenario& s_;
    const FlexiMode* mode_;
    SplitMix64 channel_;
    std::vector<SplitMix64> payload_rng_;
    std::unique_ptr<BlockCipher> cipher_;
    std::optional<CountingCipher> counting_;
    std::vector<Node> nodes_;
    std::vector<Link> links_;
    std::vector<std::uint16_t> source_ids_;
    std::vector<std::uint64_t> sent_by_source_;
    SimReport report_;
    std::uint64_t tick_now_ = 0;
    bool captured_ = false;
    std::uint64_t capture_tick_ = 0;
    Bytes captured_wire_;
    std::uint64_t injected_ = 0;
};

Adversary::Kind parse_adversary(const std::string& text) {
    if (text == "off") return Adversary::Kind::off;
    if (text == "capture_replay") return Adversary::Kind::capture_replay;
    throw std::runtime_error("scenario: adversary must be off or capture_replay");
}

}  // namespace

Scenario Scenario::from_config(const Config& cfg) {
    cfg.require_known_keys({"mode", "tier", "cipher", "replay_scheme", "counter_window",
                            "digest_window", "bloom_m", "bloom_capacity", "topology", "nodes",
                            "sources", "ticks", "send_period", "send_count", "payload_bytes",
                            "drop_rate", "reorder_rate", "adversary", "adversary_delay",
                            "adversary_count", "seed"});
    Scenario s;
    s.mode = cfg.get_string("mode", s.mode);
    s.tier = cfg.get_string("tier", s.tier);
    s.cipher = cfg.get_string("cipher", s.cipher);
    s.replay_scheme = cfg.get_string("replay_scheme", s.replay_scheme);
    s.counter_window = static_cast<unsigned>(cfg.get_u64("counter_window", s.counter_window));
    s.digest_window = static_cast<unsigned>(cfg.get_u64("digest_window", s.digest_window));
    s.bloom_m = cfg.get_u64("bloom_m", s.bloom_m);
    s.bloom_capacity = cfg.get_u64("bloom_capacity", s.bloom_capacity);
    s.topology = cfg.get_string("topology", s.topology);
    s.nodes = static_cast<unsigned>(cfg.get_u64("nodes", s.nodes));
    s.sources = static_cast<unsigned>(cfg.get_u64("sources", s.sources));
    s.ticks = cfg.get_u64("ticks", s.ticks);
    s.send_period = cfg.get_u64("send_period", s.send_period);
    s.send_count = cfg.get_u64("send_count", s.send_count);
    s.payload_bytes = cfg.get_u64("payload_bytes", s.payload_bytes);
    s.drop_rate = cfg.get_double("drop_rate", s.drop_rate);
    s.reorder_rate = cfg.get_double("reorder_rate", s.reorder_rate);
    s.adversary.kind = parse_adversary(cfg.get_string("adversary", "off"));
    s.adversary.delay = cfg.get_u64("adversary_delay", 0);
    s.adversary.count = cfg.get_u64("adversary_count", 0);
    s.seed = cfg.get_u64("seed", s.seed);
    return s;
}

SimReport run_scenario(const Scenario& s) {
    Sim sim(s);
    return sim.run();
}

}  // namespace flexisec
