#include "fhjam/jammer.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fhjam/propagation.hpp"

namespace fhjam {

int subband_anchor(const JammerSpec& spec, const BluetoothLinkSpec& link) {
    if (spec.anchor.has_value()) {
        return *spec.anchor;
    }
    const int width = spec.width_channels(link.channel_bw_mhz);
    return (link.num_channels - width + 1) / 2;
}

JammerState make_jammer_state(const JammerSpec& spec, const BluetoothLinkSpec& link) {
    JammerState state;
    state.spec = spec;
    state.width = spec.width_channels(link.channel_bw_mhz);
    state.num_positions = link.num_channels - state.width + 1;
    switch (spec.kind) {
        case JammerKind::BarrageFull:
        case JammerKind::Sweep:
            state.block_start = 0;
            break;
        case JammerKind::SubBandBarrage:
            state.block_start = subband_anchor(spec, link);
            break;
    }
    return state;
}

PowerDbm per_channel_density_dbm(const JammerSpec& spec, double channel_bw_mhz) {
    // Density uses the true bandwidth even when occupancy rounds up to whole
    // channels.
    return {watts_to_dbm(spec.total_power_w).value -
            10.0 * std::log10(spec.bandwidth_mhz / channel_bw_mhz)};
}

bool occupied(const JammerState& state, ChannelIndex ch) {
    return ch >= state.block_start && ch < state.block_start + state.width;
}

std::vector<ChannelIndex> occupied_channels(const JammerState& state) {
    std::vector<ChannelIndex> channels(static_cast<std::size_t>(state.width));
    std::iota(channels.begin(), channels.end(), state.block_start);
    return channels;
}

JammerState advance_sweep(const JammerState& state, double dt_s) {
    if (state.spec.kind != JammerKind::Sweep) {
        throw std::logic_error("advance_sweep: jammer is not a sweep");
    }
    if (!(dt_s >= 0.0)) {
        throw std::domain_error("advance_sweep: dt must be non-negative");
    }
    const double dwell = state.spec.sweep_dwell_s;
    const double before = state.elapsed_s;
    const double after = before + dt_s;
    const auto steps = static_cast<std::int64_t>(std::floor(after / dwell)) -
                       static_cast<std::int64_t>(std::floor(before / dwell));

    JammerState next = state;
    next.elapsed_s = after;
    next.block_start = static_cast<int>(
        (state.block_start + steps) % static_cast<std::int64_t>(state.num_positions));
    return next;
}

std::optional<PowerDbm> jammer_rx_dbm(const JammerState& state, ChannelIndex ch,
                                      const BluetoothLinkSpec& link,
                                      PropagationMode mode, bool per_channel_freq) {
    if (!occupied(state, ch)) {
        return std::nullopt;
    }
    const double freq = per_channel_freq
                            ? link.base_freq_mhz + ch * link.channel_bw_mhz
                            : kRepresentativeFreqMhz;
    return per_channel_density_dbm(state.spec, link.channel_bw_mhz) -
           path_loss_db(state.spec.distance_m, freq, mode);
}

}  // namespace fhjam
