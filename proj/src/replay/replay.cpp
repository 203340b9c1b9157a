#include "flexisec/replay.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flexisec {

NeighborWindowTable::NeighborWindowTable(unsigned window_size, std::size_t max_neighbors)
    : window_size_(window_size), max_neighbors_(max_neighbors) {
    if (window_size_ < 1 || window_size_ > 64)
        throw std::invalid_argument("NeighborWindowTable: window_size must be in [1, 64]");
    if (max_neighbors_ < 1) throw std::invalid_argument("NeighborWindowTable: max_neighbors must be >= 1");
}

Freshness NeighborWindowTable::check(std::uint16_t node, std::uint16_t counter) {
    auto it = entries_.find(node);
    if (it == entries_.end()) {
        if (entries_.size() >= max_neighbors_)
            throw std::length_error("NeighborWindowTable: neighbor table full");
        entries_[node] = Entry{counter, 0};
        return Freshness::fresh;
    }

    Entry& e = it->second;
    if (counter > e.last_count) {
        const unsigned delta = counter - e.last_count;
        // Slide the window forward; the old last_count lands delta back.
        e.window_bitmap = (delta >= 64) ? 0 : (e.window_bitmap << delta);
        if (delta <= 64) e.window_bitmap |= (1ull << (delta - 1));
        if (window_size_ < 64) e.window_bitmap &= (1ull << window_size_) - 1;
        e.last_count = counter;
        return Freshness::fresh;
    }
    if (counter == e.last_count) return Freshness::replayed;

    const unsigned back = e.last_count - counter;
    if (back > window_size_) return Freshness::replayed;  // beyond the window: treated as stale
    const std::uint64_t bit = 1ull << (back - 1);
    if (e.window_bitmap & bit) return Freshness::replayed;
    e.window_bitmap |= bit;
    return Freshness::fresh;
}

DigestSet::DigestSet(unsigned window_size, std::size_t max_neighbors)
    : window_size_(window_size), max_neighbors_(max_neighbors) {
    if (window_size_ < 1) throw std::invalid_argument("DigestSet: window_size must be >= 1");
    if (max_neighbors_ < 1) throw std::invalid_argument("DigestSet: max_neighbors must be >= 1");
}

Freshness DigestSet::check(std::uint16_t node, BytesView frame_bytes) {
    auto it = rings_.find(node);
    if (it == rings_.end()) {
        if (rings_.size() >= max_neighbors_) throw std::length_error("DigestSet: neighbor table full");
        it = rings_.emplace(node, std::deque<std::array<std::uint8_t, sha1_digest_bytes>>{}).first;
    }

    auto& ring = it->second;
    const auto digest = sha1(frame_bytes);
    if (std::find(ring.begin(), ring.end(), digest) != ring.end()) return Freshness::replayed;
    ring.push_back(digest);
    if (ring.size() > window_size_) ring.pop_front();
    return Freshness::fresh;
}

BloomState::BloomState(std::size_t m_bits, std::size_t reset_capacity)
    : m_bits_(m_bits), reset_capacity_(reset_capacity), bits_((m_bits + 63) / 64, 0) {
    if (m_bits_ < 1) throw std::invalid_argument("BloomState: m_bits must be >= 1");
    if (reset_capacity_ < 1) throw std::invalid_argument("BloomState: reset_capacity must be >= 1");
}

bool BloomState::query(BytesView tag) const {
    for (std::size_t i = 0; i < k_hashes; ++i) {
        const std::size_t addr = HashFamily::value(i, tag) % m_bits_;
        if (!(bits_[addr / 64] & (1ull << (addr % 64)))) return false;
    }
    return true;
}

Freshness BloomState::check_insert(BytesView tag) {
    if (query(tag)) return Freshness::replayed;
    for (std::size_t i = 0; i < k_hashes; ++i) {
        const std::size_t addr = HashFamily::value(i, tag) % m_bits_;
        bits_[addr / 64] |= 1ull << (addr % 64);
    }
    if (++inserted_ >= reset_capacity_) {
        std::fill(bits_.begin(), bits_.end(), 0);
        inserted_ = 0;
        ++epoch_;
    }
    return Freshness::fresh;
}

double fp_rate(std::size_t m, std::size_t k, std::size_t n) {
    if (m < 1 || k < 1) throw std::invalid_argument("fp_rate: m and k must be >= 1");
    if (n == 0) return 0.0;
    const double fill = 1.0 - std::pow(1.0 - 1.0 / static_cast<double>(m),
                                       static_cast<double>(k) * static_cast<double>(n));
    return std::pow(fill, static_cast<double>(k));
}

double fp_rate_exp(std::size_t m, std::size_t k, std::size_t n) {
    if (m < 1 || k < 1) throw std::invalid_argument("fp_rate_exp: m and k must be >= 1");
    if (n == 0) return 0.0;
    const double fill =
        1.0 - std::exp(-static_cast<double>(k) * static_cast<double>(n) / static_cast<double>(m));
    return std::pow(fill, static_cast<double>(k));
}

double fp_rate_saturated(std::size_t k) {
    if (k < 1) throw std::invalid_argument("fp_rate_saturated: k must be >= 1");
    return std::pow(2.0, -static_cast<double>(k));
}

std::size_t replay_state_bytes(std::string_view scheme, std::size_t nodes, unsigned window,
                               std::size_t m_bits) {
    if (nodes < 2) throw std::invalid_argument("replay_state_bytes: need at least 2 nodes");
    if (scheme == "counter") return (nodes - 1) * 2;
    if (scheme == "digest") return (nodes - 1) * window * sha1_digest_bytes;
    if (scheme == "bloom") return m_bits / 8;
    throw std::invalid_argument("replay_state_bytes: unknown scheme " + std::string(scheme));
}

std::size_t replay_state_bytes_network(std::string_view scheme, std::size_t nodes, unsigned window,
                                       std::size_t m_bits) {
    return nodes * replay_state_bytes(scheme, nodes, window, m_bits);
}

}  // namespace flexisec
