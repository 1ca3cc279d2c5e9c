#include "fhjam/scenario.hpp"

#include <cmath>
#include <sstream>

namespace fhjam {

int JammerSpec::width_channels(double channel_bw_mhz) const {
    // Round up to whole channels; ratios within 1e-9 of an integer count as
    // exact so that e.g. 20 MHz / 1 MHz never widens to 21.
    const double ratio = bandwidth_mhz / channel_bw_mhz;
    return static_cast<int>(std::ceil(ratio - 1e-9));
}

double default_bandwidth_mhz(JammerKind kind) {
    switch (kind) {
        case JammerKind::BarrageFull: return 79.0;
        case JammerKind::SubBandBarrage: return 20.0;
        case JammerKind::Sweep: return 5.0;
    }
    return 79.0;
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& v : violations) {
        out << v.field << ": " << v.message << "\n";
    }
    return out.str();
}

namespace {

bool finite(double x) { return std::isfinite(x); }

}  // namespace

ValidationReport validate_scenario(const Scenario& s, ValidateOptions opt) {
    ValidationReport report;
    auto fail = [&report](std::string field, std::string message) {
        report.violations.push_back({std::move(field), std::move(message)});
    };

    const auto& link = s.link;
    if (!finite(link.tx_power.value)) fail("link.tx_dbm", "must be finite");
    if (!finite(link.sensitivity.value)) fail("link.sensitivity_dbm", "must be finite");
    if (link.num_channels < 1) fail("link.channels", "num_channels >= 1");
    if (!(link.channel_bw_mhz > 0.0)) fail("link.channel_bw_mhz", "channel_bw > 0");
    if (!(link.slot_duration_s > 0.0)) fail("link.slot_us", "slot_duration > 0");
    if (!(link.base_freq_mhz > 0.0)) fail("link.base_freq_mhz", "base_freq > 0");
    if (opt.strict_table1 &&
        !(link.equipment_distance_m >= 0.30 && link.equipment_distance_m <= 1.2)) {
        fail("link.equipment_distance_m", "must lie in 0.30..1.2 m");
    }

    const auto& jam = s.jammer;
    const double band = link.band_mhz();
    if (!(jam.total_power_w > 0.0)) fail("jammer.power_w", "total_power > 0");
    if (!(jam.bandwidth_mhz > 0.0)) {
        fail("jammer.bandwidth_mhz", "bandwidth > 0");
    } else if (jam.bandwidth_mhz > band * (1.0 + 1e-12)) {
        fail("jammer.bandwidth_mhz", "bandwidth exceeds band");
    }
    if (!(jam.distance_m > 0.0)) fail("jammer.distance_m", "distance > 0");
    if (jam.kind == JammerKind::Sweep && !(jam.sweep_dwell_s > 0.0)) {
        fail("jammer.sweep_dwell_ms", "sweep requires sweep_dwell > 0");
    }
    if (jam.kind == JammerKind::BarrageFull &&
        std::abs(jam.bandwidth_mhz - band) > 1e-9 * band) {
        fail("jammer.bandwidth_mhz",
             "full barrage must span the whole band; use kind subband for less");
    }
    if (jam.kind == JammerKind::SubBandBarrage && jam.anchor.has_value() &&
        link.num_channels >= 1 && jam.bandwidth_mhz > 0.0 &&
        link.channel_bw_mhz > 0.0) {
        const int width = jam.width_channels(link.channel_bw_mhz);
        if (*jam.anchor < 0 || *jam.anchor > link.num_channels - width) {
            fail("jammer.anchor", "block must fit inside the band");
        }
    }

    const auto& afh = s.afh;
    if (afh.ber_window < 1) fail("afh.window", "ber_window >= 1");
    if (!(afh.bad_threshold > 0.0 && afh.bad_threshold <= 1.0)) {
        fail("afh.threshold", "bad_threshold in (0, 1]");
    }
    if (afh.min_active < 1 || afh.min_active > link.num_channels) {
        fail("afh.min_active", "1 <= min_active <= num_channels");
    }

    if (s.duration_slots < 1) fail("run.slots", "duration_slots >= 1");
    if (s.window_slots < 1) fail("run.window_slots", "window_slots >= 1");
    if (!finite(s.margin_db.value)) fail("margin_db", "must be finite");

    return report;
}

}  // namespace fhjam
