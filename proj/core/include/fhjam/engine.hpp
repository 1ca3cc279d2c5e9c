#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fhjam/afh.hpp"
#include "fhjam/jammer.hpp"
#include "fhjam/scenario.hpp"
#include "fhjam/units.hpp"

namespace fhjam {

/// One slot of the simulation. n_active and pg describe the map state the
/// slot's threshold was computed from, i.e. before this slot's bookkeeping.
struct SlotOutcome {
    std::uint64_t slot = 0;
    double time_s = 0.0;               // slot * slot_duration
    ChannelIndex channel = 0;
    bool occupied = false;
    std::optional<PowerDbm> j_rx;      // nullopt when the hop misses the jammer band
    PowerDbm threshold{0.0};
    bool jammed = false;
    int n_active = 0;
    DecibelGain pg{0.0};

    friend bool operator==(const SlotOutcome&, const SlotOutcome&) = default;
};

struct WindowAggregate {
    std::uint64_t first_slot = 0;
    std::uint64_t last_slot = 0;
    double end_time_s = 0.0;           // (last_slot + 1) * slot_duration
    double jammed_fraction = 0.0;
    double mean_pg_db = 0.0;
    int n_active_end = 0;              // n_active of the window's last outcome
};

/// Ordered per-slot outcomes plus windowed aggregates; the substrate for all
/// figure and CSV emission. The final window may be partial.
struct TimeSeries {
    Scenario scenario;                 // as run, dwell already quantized
    std::vector<SlotOutcome> outcomes;
    std::vector<WindowAggregate> windows;
};

/// Returns a copy with the sweep dwell rounded to the nearest whole number
/// of slots, minimum one. No-op for barrage kinds.
JammerSpec quantize_dwell(const JammerSpec& spec, double slot_duration_s);

/// Advances the simulation one slot, in this order: (1) a sweep moves by one
/// slot duration, (2) the hop channel is drawn, (3) the threshold comes from
/// the pre-update map, (4) received level and jammed flag, (5) the map logs
/// the visit. The returned outcome carries the pre-update pg and n_active.
SlotOutcome step(const Scenario& s, JammerState& jam, ChannelMap& map,
                 HopPrng& prng, std::uint64_t slot);

/// duration_slots sequential steps from fresh states seeded by the scenario.
/// Pure function of the scenario; throws std::invalid_argument when
/// validate_scenario reports violations.
TimeSeries run(const Scenario& s);

}  // namespace fhjam
