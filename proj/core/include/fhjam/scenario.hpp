#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fhjam/units.hpp"

namespace fhjam {

/// Hop channel number, 0-based. Channel k sits at base_freq + k * channel_bw.
using ChannelIndex = int;

enum class JammerKind { BarrageFull, SubBandBarrage, Sweep };
enum class PropagationMode { PaperLiteral, PhysicalFspl };
enum class PgMode { Dynamic, Static19dB };

/// The victim link: a 79-channel, 1 MHz-spaced frequency hopper with
/// 625 us slots.
struct BluetoothLinkSpec {
    PowerDbm tx_power{0.0};         // 1 mW
    PowerDbm sensitivity{-70.0};
    int num_channels = 79;
    double channel_bw_mhz = 1.0;
    double slot_duration_s = us_to_s(625.0);
    double base_freq_mhz = 2402.0;  // lowest-channel carrier
    double equipment_distance_m = 1.0;

    double band_mhz() const { return num_channels * channel_bw_mhz; }

    friend bool operator==(const BluetoothLinkSpec&, const BluetoothLinkSpec&) = default;
};

/// Noise jammer parameterization. Power is spread flat across the band.
struct JammerSpec {
    JammerKind kind = JammerKind::BarrageFull;
    double total_power_w = 1.0;
    double bandwidth_mhz = 79.0;
    double distance_m = 10.0;
    // Dwell per sweep position. Default is exactly 21 slots, giving a full
    // 75-position sweep in 1575 slots (~1 s) -- slow next to the 625 us hop.
    double sweep_dwell_s = ms_to_s(13.125);
    // SubBandBarrage block anchor (lowest occupied channel); centered on the
    // band when unset. Ignored by the other kinds.
    std::optional<int> anchor;
    double carrier_center_mhz = 2441.5;

    /// Occupied block width in whole channels (fractional bandwidth rounds up).
    int width_channels(double channel_bw_mhz) const;

    friend bool operator==(const JammerSpec&, const JammerSpec&) = default;
};

/// Default jammer bandwidth for each kind: 79 / 20 / 5 MHz.
double default_bandwidth_mhz(JammerKind kind);

/// Channel-classification knobs. A channel is blacklisted when its last
/// ber_window visits are at least bad_threshold jammed.
struct AfhConfig {
    int ber_window = 8;
    double bad_threshold = 0.5;
    int min_active = 20;
    // Slots after which a blacklisted channel is re-tried; nullopt = never.
    std::optional<std::uint64_t> blacklist_timeout_slots = 20000;
    PgMode pg_mode = PgMode::Dynamic;

    friend bool operator==(const AfhConfig&, const AfhConfig&) = default;
};

/// Complete simulation input. A scenario plus nothing else determines a run.
struct Scenario {
    BluetoothLinkSpec link;
    JammerSpec jammer;
    PropagationMode propagation = PropagationMode::PaperLiteral;
    std::uint64_t duration_slots = 16000;  // 10 s
    std::uint64_t seed = 42;
    AfhConfig afh;
    DecibelGain margin_db{3.0};
    std::uint64_t window_slots = 1600;     // aggregation window, 1 s

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct Violation {
    std::string field;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

struct ValidateOptions {
    // Enforce the 0.30..1.2 m equipment-distance range.
    bool strict_table1 = true;
};

/// Checks every scenario invariant; an empty report means valid. Validation
/// failure is data, not an exception.
ValidationReport validate_scenario(const Scenario& s, ValidateOptions opt = {});

}  // namespace fhjam
