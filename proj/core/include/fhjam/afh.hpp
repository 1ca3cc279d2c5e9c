#pragma once

#include <cstdint>
#include <vector>

#include "fhjam/prng.hpp"
#include "fhjam/scenario.hpp"
#include "fhjam/units.hpp"

namespace fhjam {

/// Per-channel visit log: a bounded FIFO of jammed/clean flags (capacity
/// ber_window) plus lifetime counters.
class ChannelStats {
public:
    explicit ChannelStats(int window_capacity);

    void push(bool jammed);
    void clear_window();

    bool window_full() const { return count_ == capacity_; }
    int window_count() const { return count_; }
    int window_jammed() const { return jam_sum_; }
    /// Jammed fraction over the visits currently in the window.
    double windowed_ber() const;

    std::uint64_t total_visits() const { return total_visits_; }
    std::uint64_t total_jammed() const { return total_jammed_; }

private:
    std::vector<std::uint8_t> ring_;
    int capacity_;
    int head_ = 0;
    int count_ = 0;
    int jam_sum_ = 0;
    std::uint64_t total_visits_ = 0;
    std::uint64_t total_jammed_ = 0;
};

/// AFH channel classification state. Active and blacklisted channels always
/// partition {0..num_channels-1}, and enforcement keeps the active count at
/// or above min_active.
class ChannelMap {
public:
    ChannelMap(int num_channels, AfhConfig cfg);

    int num_channels() const { return static_cast<int>(entries_.size()); }
    int n_active() const { return n_active_; }
    const AfhConfig& config() const { return cfg_; }

    bool is_active(ChannelIndex ch) const { return entries_.at(ch).active; }
    /// Slot at which the channel was blacklisted; meaningful only while
    /// blacklisted.
    std::uint64_t blacklist_stamp(ChannelIndex ch) const { return entries_.at(ch).stamp; }
    const ChannelStats& stats(ChannelIndex ch) const { return entries_.at(ch).stats; }

    std::vector<ChannelIndex> active_channels() const;
    std::vector<ChannelIndex> blacklisted_channels() const;

    /// k-th smallest active channel, k in [0, n_active).
    ChannelIndex nth_active(int k) const;

    /// Logs one visit. If the window is full and its jammed fraction reaches
    /// bad_threshold, the channel is blacklisted (stamped with slot); the
    /// min-active and timeout rules then run. Throws std::logic_error when
    /// ch is not active.
    void record_slot(ChannelIndex ch, bool jammed, std::uint64_t slot);

    /// Re-admits the oldest-stamped blacklisted channels while the active
    /// count is below min_active, then any channel blacklisted more than
    /// blacklist_timeout_slots ago (slot - stamp > timeout). Re-admission
    /// clears the channel's visit window.
    void enforce_min_active(std::uint64_t slot);

    /// Dynamic: 10*log10(n_active). Static19dB: 19 dB regardless of the map.
    DecibelGain processing_gain_db() const;

private:
    struct Entry {
        bool active = true;
        std::uint64_t stamp = 0;
        ChannelStats stats;
    };

    void readmit(ChannelIndex ch);

    AfhConfig cfg_;
    std::vector<Entry> entries_;
    int n_active_ = 0;
};

/// Uniform draw over the active set. Identical (seed, map) pairs yield
/// identical draws.
ChannelIndex next_hop(HopPrng& prng, const ChannelMap& map);

}  // namespace fhjam
