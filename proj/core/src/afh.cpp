#include "fhjam/afh.hpp"

#include <cmath>
#include <stdexcept>

namespace fhjam {

ChannelStats::ChannelStats(int window_capacity)
    : ring_(static_cast<std::size_t>(window_capacity), 0),
      capacity_(window_capacity) {}

void ChannelStats::push(bool jammed) {
    if (count_ == capacity_) {
        jam_sum_ -= ring_[head_];
    } else {
        ++count_;
    }
    ring_[head_] = jammed ? 1 : 0;
    jam_sum_ += ring_[head_];
    head_ = (head_ + 1) % capacity_;
    ++total_visits_;
    if (jammed) {
        ++total_jammed_;
    }
}

void ChannelStats::clear_window() {
    head_ = 0;
    count_ = 0;
    jam_sum_ = 0;
}

double ChannelStats::windowed_ber() const {
    if (count_ == 0) {
        return 0.0;
    }
    return static_cast<double>(jam_sum_) / static_cast<double>(count_);
}

ChannelMap::ChannelMap(int num_channels, AfhConfig cfg)
    : cfg_(cfg), n_active_(num_channels) {
    if (num_channels < 1) {
        throw std::invalid_argument("ChannelMap: need at least one channel");
    }
    entries_.reserve(static_cast<std::size_t>(num_channels));
    for (int i = 0; i < num_channels; ++i) {
        entries_.push_back(Entry{true, 0, ChannelStats(cfg_.ber_window)});
    }
}

std::vector<ChannelIndex> ChannelMap::active_channels() const {
    std::vector<ChannelIndex> out;
    out.reserve(static_cast<std::size_t>(n_active_));
    for (int ch = 0; ch < num_channels(); ++ch) {
        if (entries_[ch].active) {
            out.push_back(ch);
        }
    }
    return out;
}

std::vector<ChannelIndex> ChannelMap::blacklisted_channels() const {
    std::vector<ChannelIndex> out;
    for (int ch = 0; ch < num_channels(); ++ch) {
        if (!entries_[ch].active) {
            out.push_back(ch);
        }
    }
    return out;
}

ChannelIndex ChannelMap::nth_active(int k) const {
    int seen = 0;
    for (int ch = 0; ch < num_channels(); ++ch) {
        if (entries_[ch].active) {
            if (seen == k) {
                return ch;
            }
            ++seen;
        }
    }
    throw std::logic_error("ChannelMap::nth_active: index out of range");
}

void ChannelMap::record_slot(ChannelIndex ch, bool jammed, std::uint64_t slot) {
    if (ch < 0 || ch >= num_channels() || !entries_[ch].active) {
        throw std::logic_error("ChannelMap::record_slot: channel not active");
    }
    Entry& entry = entries_[ch];
    entry.stats.push(jammed);
    if (entry.stats.window_full() && entry.stats.windowed_ber() >= cfg_.bad_threshold) {
        entry.active = false;
        entry.stamp = slot;
        entry.stats.clear_window();
        --n_active_;
    }
    enforce_min_active(slot);
}

void ChannelMap::readmit(ChannelIndex ch) {
    entries_[ch].active = true;
    entries_[ch].stats.clear_window();
    ++n_active_;
}

void ChannelMap::enforce_min_active(std::uint64_t slot) {
    while (n_active_ < cfg_.min_active) {
        int oldest = -1;
        for (int ch = 0; ch < num_channels(); ++ch) {
            if (!entries_[ch].active &&
                (oldest < 0 || entries_[ch].stamp < entries_[oldest].stamp)) {
                oldest = ch;
            }
        }
        if (oldest < 0) {
            break;  // nothing left to re-admit
        }
        readmit(oldest);
    }
    if (cfg_.blacklist_timeout_slots.has_value()) {
        const std::uint64_t timeout = *cfg_.blacklist_timeout_slots;
        for (int ch = 0; ch < num_channels(); ++ch) {
            if (!entries_[ch].active && slot - entries_[ch].stamp > timeout) {
                readmit(ch);
            }
        }
    }
}

DecibelGain ChannelMap::processing_gain_db() const {
    if (cfg_.pg_mode == PgMode::Static19dB) {
        return {19.0};
    }
    return {10.0 * std::log10(static_cast<double>(n_active_))};
}

ChannelIndex next_hop(HopPrng& prng, const ChannelMap& map) {
    if (map.n_active() < 1) {
        throw std::logic_error("next_hop: no active channels");
    }
    const auto k = prng.draw_below(static_cast<std::uint64_t>(map.n_active()));
    return map.nth_active(static_cast<int>(k));
}

}  // namespace fhjam
