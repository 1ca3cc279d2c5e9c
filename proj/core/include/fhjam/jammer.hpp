#pragma once

#include <optional>
#include <vector>

#include "fhjam/scenario.hpp"
#include "fhjam/units.hpp"

namespace fhjam {

/// Spectral occupancy of a jammer at an instant. All three kinds occupy one
/// contiguous block of channels; only a sweep's block moves.
struct JammerState {
    JammerSpec spec;
    int width = 1;          // block width in channels
    int num_positions = 1;  // legal block anchors: num_channels - width + 1
    int block_start = 0;    // lowest occupied channel (the sweep position)
    double elapsed_s = 0.0;

    friend bool operator==(const JammerState&, const JammerState&) = default;
};

/// Initial state: barrage at 0, sub-band at its anchor, sweep at position 0.
JammerState make_jammer_state(const JammerSpec& spec, const BluetoothLinkSpec& link);

/// SubBandBarrage block anchor: spec.anchor if set, else centered on the band.
int subband_anchor(const JammerSpec& spec, const BluetoothLinkSpec& link);

/// Noise power falling inside one victim channel, assuming flat density
/// across the jammer band: watts_to_dbm(P) - 10*log10(bandwidth/channel_bw).
PowerDbm per_channel_density_dbm(const JammerSpec& spec, double channel_bw_mhz);

bool occupied(const JammerState& state, ChannelIndex ch);

/// Occupied set, ascending. Cardinality is always ceil(bandwidth/channel_bw).
std::vector<ChannelIndex> occupied_channels(const JammerState& state);

/// Advances a sweep by dt seconds: the position steps once per full dwell
/// crossed, ascending, wrapping from the last legal position back to 0.
/// Step count is floor((elapsed+dt)/dwell) - floor(elapsed/dwell), so
/// advancing by a then b equals advancing by a+b whenever the elapsed-time
/// additions are exact (dyadic dt); otherwise they may differ by one ulp of
/// accumulated time.
/// Throws std::logic_error for non-sweep kinds.
JammerState advance_sweep(const JammerState& state, double dt_s);

/// Received jamming level on a channel: per-channel density minus path loss
/// at the jammer distance, or nullopt when the channel is outside the block
/// (treated as -inf in comparisons). Path loss is evaluated at 2440 MHz
/// unless per_channel_freq is set.
std::optional<PowerDbm> jammer_rx_dbm(const JammerState& state, ChannelIndex ch,
                                      const BluetoothLinkSpec& link,
                                      PropagationMode mode,
                                      bool per_channel_freq = false);

}  // namespace fhjam
