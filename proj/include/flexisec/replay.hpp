#pragma once
// The three anti-replay schemes and their state-size / false-positive
// analytics:
//   NeighborWindowTable  per-neighbor last-counter + sliding window bitmap
//   DigestSet            per-neighbor ring of SHA-1 frame digests
//   BloomState           m-bit vector addressed by the 8-hash family
// Every scheme is single-writer: one receiving node owns one state object.

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <string_view>
#include <variant>
#include <vector>

#include "flexisec/bytes.hpp"
#include "flexisec/hash_family.hpp"
#include "flexisec/sha1.hpp"

namespace flexisec {

enum class Freshness { fresh, replayed };

// Sliding-window counter check: counters above the neighbor's last seen are
// fresh and advance the window; counters at or below it are fresh only if
// they fall inside the window and were not seen before. window_size = 1
// degenerates to the strict monotone rule. Throws std::length_error when a
// new neighbor would exceed max_neighbors.
class NeighborWindowTable {
  public:
    explicit NeighborWindowTable(unsigned window_size = 8, std::size_t max_neighbors = 150);

    Freshness check(std::uint16_t node, std::uint16_t counter);

    unsigned window_size() const { return window_size_; }
    std::size_t neighbor_count() const { return entries_.size(); }

  private:
    struct Entry {
        std::uint16_t last_count = 0;
        std::uint64_t window_bitmap = 0;  // bit d-1 set = counter (last_count - d) seen
    };
    unsigned window_size_;
    std::size_t max_neighbors_;
    std::map<std::uint16_t, Entry> entries_;
};

// Replay detection by exact digest match over the window_size most recent
// frames per neighbor; older duplicates fall out of the ring (a documented
// scheme limitation, not a defect).
class DigestSet {
  public:
    explicit DigestSet(unsigned window_size = 8, std::size_t max_neighbors = 7);

    Freshness check(std::uint16_t node, BytesView frame_bytes);

    unsigned window_size() const { return window_size_; }
    std::size_t neighbor_count() const { return rings_.size(); }

  private:
    unsigned window_size_;
    std::size_t max_neighbors_;
    std::map<std::uint16_t, std::deque<std::array<std::uint8_t, sha1_digest_bytes>>> rings_;
};

// Bloom-filter freshness check: a tag is replayed iff all k addressed bits
// are already set; a fresh tag sets its bits. Bits only transition 0 -> 1
// within an epoch; when inserted reaches reset_capacity the vector clears
// and the epoch counter increments (cross-epoch replays become invisible —
// documented limitation).
class BloomState {
  public:
    static constexpr std::size_t k_hashes = HashFamily::k;

    explicit BloomState(std::size_t m_bits = 512, std::size_t reset_capacity = 256);

    // Membership test only; never modifies the filter.
    bool query(BytesView tag) const;

    // Query-then-insert with the reset policy applied after insertion.
    Freshness check_insert(BytesView tag);

    std::size_t m_bits() const { return m_bits_; }
    std::size_t inserted() const { return inserted_; }
    std::size_t epoch() const { return epoch_; }
    std::size_t reset_capacity() const { return reset_capacity_; }

  private:
    std::size_t m_bits_;
    std::size_t reset_capacity_;
    std::size_t inserted_ = 0;
    std::size_t epoch_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Exact false-positive probability of a (m,k,n) Bloom filter:
// (1 - (1 - 1/m)^(k n))^k.
double fp_rate(std::size_t m, std::size_t k, std::size_t n);

// Exponential approximation (1 - e^(-k n / m))^k.
double fp_rate_exp(std::size_t m, std::size_t k, std::size_t n);

// Saturated-filter ceiling 1/2^k (every probe bit a coin flip).
double fp_rate_saturated(std::size_t k);

// Per-node replay state bytes: counter = (nodes-1)*2, digest =
// (nodes-1)*window*20, bloom = m/8. Throws on an unknown scheme name.
std::size_t replay_state_bytes(std::string_view scheme, std::size_t nodes, unsigned window,
                               std::size_t m_bits = 512);

// Whole-network total: nodes * per-node (counter case is n(n-1)*2).
std::size_t replay_state_bytes_network(std::string_view scheme, std::size_t nodes, unsigned window,
                                       std::size_t m_bits = 512);

}  // namespace flexisec
