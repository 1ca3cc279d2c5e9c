#include "fhjam/engine.hpp"

#include <cmath>
#include <stdexcept>

#include "fhjam/propagation.hpp"

namespace fhjam {

JammerSpec quantize_dwell(const JammerSpec& spec, double slot_duration_s) {
    if (spec.kind != JammerKind::Sweep) {
        return spec;
    }
    JammerSpec out = spec;
    const auto dwell_slots =
        std::max<std::int64_t>(1, std::llround(spec.sweep_dwell_s / slot_duration_s));
    out.sweep_dwell_s = static_cast<double>(dwell_slots) * slot_duration_s;
    return out;
}

SlotOutcome step(const Scenario& s, JammerState& jam, ChannelMap& map,
                 HopPrng& prng, std::uint64_t slot) {
    if (jam.spec.kind == JammerKind::Sweep) {
        jam = advance_sweep(jam, s.link.slot_duration_s);
    }

    const ChannelIndex ch = next_hop(prng, map);

    SlotOutcome out;
    out.slot = slot;
    out.time_s = static_cast<double>(slot) * s.link.slot_duration_s;
    out.channel = ch;
    out.n_active = map.n_active();
    out.pg = map.processing_gain_db();
    out.threshold = jamming_threshold_dbm(s.link.sensitivity, out.pg, s.margin_db);
    out.occupied = occupied(jam, ch);
    out.j_rx = jammer_rx_dbm(jam, ch, s.link, s.propagation);
    out.jammed = out.occupied && out.j_rx.has_value() && *out.j_rx >= out.threshold;

    map.record_slot(ch, out.jammed, slot);
    return out;
}

TimeSeries run(const Scenario& scenario) {
    const ValidationReport report = validate_scenario(scenario);
    if (!report.ok()) {
        throw std::invalid_argument("run: invalid scenario\n" + report.to_string());
    }

    Scenario s = scenario;
    s.jammer = quantize_dwell(s.jammer, s.link.slot_duration_s);

    TimeSeries ts;
    ts.scenario = s;
    ts.outcomes.reserve(s.duration_slots);

    JammerState jam = make_jammer_state(s.jammer, s.link);
    ChannelMap map(s.link.num_channels, s.afh);
    HopPrng prng(s.seed);

    for (std::uint64_t slot = 0; slot < s.duration_slots; ++slot) {
        ts.outcomes.push_back(step(s, jam, map, prng, slot));
    }

    // Windowed aggregates; the last window may be partial.
    const std::uint64_t window = s.window_slots;
    for (std::uint64_t first = 0; first < s.duration_slots; first += window) {
        const std::uint64_t last = std::min(first + window, s.duration_slots) - 1;
        WindowAggregate agg;
        agg.first_slot = first;
        agg.last_slot = last;
        agg.end_time_s = static_cast<double>(last + 1) * s.link.slot_duration_s;
        std::uint64_t jammed = 0;
        double pg_sum = 0.0;
        for (std::uint64_t i = first; i <= last; ++i) {
            jammed += ts.outcomes[i].jammed ? 1 : 0;
            pg_sum += ts.outcomes[i].pg.value;
        }
        const auto count = static_cast<double>(last - first + 1);
        agg.jammed_fraction = static_cast<double>(jammed) / count;
        agg.mean_pg_db = pg_sum / count;
        agg.n_active_end = ts.outcomes[last].n_active;
        ts.windows.push_back(agg);
    }
    return ts;
}

}  // namespace fhjam
