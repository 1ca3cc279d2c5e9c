// Acceptance checks for the jamming simulator, one line per criterion.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "fhjam/afh.hpp"
#include "fhjam/engine.hpp"
#include "fhjam/jammer.hpp"
#include "fhjam/propagation.hpp"
#include "fhjam/report.hpp"
#include "fhjam/units.hpp"
#include "oracle_sim.hpp"

using namespace fhjam;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("%s  %2d  %-24s %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    if (!ok) {
        ++failures;
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// 1. Threshold identity: -70 dBm + 19 dB + 3 dB = -48 dBm, exactly.
void criterion_threshold() {
    const double t =
        jamming_threshold_dbm(PowerDbm{-70.0}, DecibelGain{19.0}, DecibelGain{3.0})
            .value;
    report(1, "threshold identity", t == -48.0, "threshold " + fmt(t) + " dBm");
}

// 2. Literal-formula path loss: 115.711 dB at 6 m (within 2 dB of the quoted
//    ~117 dB) and 120.148 dB at 10 m, both to 1e-3.
void criterion_path_loss() {
    const double pl6 = path_loss_db(6.0, 2440.0, PropagationMode::PaperLiteral).value;
    const double pl10 = path_loss_db(10.0, 2440.0, PropagationMode::PaperLiteral).value;
    const bool ok = std::abs(pl6 - 115.711) <= 1e-3 && std::abs(pl6 - 117.0) <= 2.0 &&
                    std::abs(pl10 - 120.148) <= 1e-3;
    report(2, "path-loss reproduction", ok,
           "PL(6 m) " + fmt(pl6) + " dB, PL(10 m) " + fmt(pl10) + " dB");
}

// 3. Processing gain: 18.976 dB for 79 channels (rounds to 19), 13.010 dB at
//    the 20-channel floor.
void criterion_processing_gain() {
    const double pg79 = ChannelMap(79, AfhConfig{}).processing_gain_db().value;
    const double pg20 = 10.0 * std::log10(20.0);
    const bool ok = std::abs(pg79 - 18.976) <= 1e-3 && std::lround(pg79) == 19 &&
                    std::abs(pg20 - 13.010) <= 1e-3;
    report(3, "processing gain", ok,
           "pg(79) " + fmt(pg79) + " dB, pg(20) " + fmt(pg20) + " dB");
}

// 4. Scenario 1 (1 W full barrage, 10 m, literal formula): no jammed slots.
void criterion_scenario1() {
    const TimeSeries ts = run(preset(PresetId::Scenario1, 1.0));
    std::uint64_t jammed = 0;
    for (const auto& o : ts.outcomes) {
        jammed += o.jammed ? 1 : 0;
    }
    const SummaryRow row = summarize("scenario1:1w", ts);
    const bool ok = jammed == 0 && row.verdict == "no-effect";
    report(4, "scenario-1 verdict", ok,
           std::to_string(jammed) + " jammed slots, verdict " + row.verdict);
}

// 5. Per-channel density rises as the band shrinks: 11.024 / 16.990 / 23.010
//    dBm for 1 W over 79 / 20 / 5 MHz.
void criterion_density() {
    JammerSpec j;
    j.total_power_w = 1.0;
    j.bandwidth_mhz = 79.0;
    const double d79 = per_channel_density_dbm(j, 1.0).value;
    j.bandwidth_mhz = 20.0;
    const double d20 = per_channel_density_dbm(j, 1.0).value;
    j.bandwidth_mhz = 5.0;
    const double d5 = per_channel_density_dbm(j, 1.0).value;
    const bool ok = d79 < d20 && d20 < d5 && std::abs(d79 - 11.024) <= 1e-3 &&
                    std::abs(d20 - 16.990) <= 1e-3 && std::abs(d5 - 23.010) <= 1e-3;
    report(5, "power-density tradeoff", ok,
           fmt(d79) + " / " + fmt(d20) + " / " + fmt(d5) + " dBm");
}

// 6. Fig-4 shape: 5 W sweep under free space with no blacklist timeout decays
//    monotonically to the 20-channel floor.
void criterion_fig4_shape() {
    Scenario s = preset(PresetId::Scenario3, 5.0);
    s.propagation = PropagationMode::PhysicalFspl;
    s.afh.blacklist_timeout_slots.reset();
    s.duration_slots = 160000;
    const TimeSeries ts = run(s);

    bool monotone = true;
    std::uint64_t rise_slot = 0;
    for (std::size_t i = 1; i < ts.outcomes.size(); ++i) {
        if (ts.outcomes[i].pg.value > ts.outcomes[i - 1].pg.value) {
            monotone = false;
            rise_slot = i;
            break;
        }
    }
    const auto& last = ts.outcomes.back();
    const bool floored =
        last.n_active == 20 && std::abs(last.pg.value - 13.010) <= 1e-3;
    std::string detail = "final n_active " + std::to_string(last.n_active) +
                         ", final pg " + fmt(last.pg.value) + " dB";
    if (!monotone) {
        detail += ", pg rises at slot " + std::to_string(rise_slot);
    }
    report(6, "fig-4 shape", monotone && floored, detail);
}

// 7. Linear per-channel densities sum back to the jammer's total power.
void criterion_power_conservation() {
    double worst = 0.0;
    for (const double bw : {79.0, 20.0, 5.0}) {
        for (const double watts : {1.0, 2.0, 5.0}) {
            JammerSpec j;
            j.kind = bw == 79.0  ? JammerKind::BarrageFull
                     : bw == 20.0 ? JammerKind::SubBandBarrage
                                  : JammerKind::Sweep;
            j.bandwidth_mhz = bw;
            j.total_power_w = watts;
            const double total_mw =
                j.width_channels(1.0) * dbm_to_mw(per_channel_density_dbm(j, 1.0));
            worst = std::max(worst,
                             std::abs(total_mw - watts * 1000.0) / (watts * 1000.0));
        }
    }
    report(7, "power conservation", worst <= 1e-9,
           "worst relative error " + fmt(worst * 1e9) + "e-9");
}

// 8. The engine reproduces an independently written reference simulator,
//    outcome for outcome, across ten seeds.
void criterion_oracle() {
    int matching = 0;
    for (std::uint64_t seed = 101; seed <= 110; ++seed) {
        Scenario s;
        s.link.num_channels = 8;
        s.jammer.kind = JammerKind::Sweep;
        s.jammer.bandwidth_mhz = 3.0;
        s.jammer.total_power_w = 5.0;
        s.jammer.distance_m = 1.0;
        s.jammer.sweep_dwell_s = 10 * s.link.slot_duration_s;
        s.propagation = PropagationMode::PhysicalFspl;
        s.afh.min_active = 3;
        s.afh.blacklist_timeout_slots = 1000;
        s.duration_slots = 5000;
        s.seed = seed;
        if (run(s).outcomes == fhjam_test::oracle_run(s)) {
            ++matching;
        }
    }
    report(8, "oracle equivalence", matching == 10,
           std::to_string(matching) + "/10 seeds identical");
}

// 9. Byte-identical CSV when any preset is run twice.
void criterion_determinism() {
    int stable = 0;
    for (const auto id : {PresetId::Scenario1, PresetId::Scenario2, PresetId::Scenario3}) {
        for (const double watts : {1.0, 2.0, 5.0}) {
            const Scenario s = preset(id, watts);
            if (timeseries_csv(run(s)) == timeseries_csv(run(s))) {
                ++stable;
            }
        }
    }
    report(9, "determinism", stable == 9,
           std::to_string(stable) + "/9 presets byte-stable");
}

// 10. Fig-3 structure: monotone decay with distance, exact power offsets,
//     constant -48 dBm threshold line.
void criterion_fig3() {
    const FigureSeries fig = make_fig3(preset(PresetId::Scenario1, 1.0));
    const double d2 = 10.0 * std::log10(2.0);
    const double d5 = 10.0 * std::log10(5.0);
    bool ok = fig.columns.size() == 5;
    for (std::size_t i = 0; ok && i < fig.columns[0].size(); ++i) {
        for (int c = 1; c <= 3; ++c) {
            if (i > 0 && !(fig.columns[c][i] < fig.columns[c][i - 1])) {
                ok = false;
            }
        }
        const double gap2 = fig.columns[2][i] - fig.columns[1][i];
        const double gap5 = fig.columns[3][i] - fig.columns[1][i];
        if (std::abs(gap2 - d2) > 1e-9 || std::abs(gap2 - 3.0103) > 1e-3 ||
            std::abs(gap5 - d5) > 1e-9 || std::abs(gap5 - 6.9897) > 1e-3 ||
            fig.columns[4][i] != -48.0) {
            ok = false;
        }
    }
    report(10, "fig-3 structure", ok,
           "offsets " + fmt(fig.columns[2][0] - fig.columns[1][0]) + " / " +
               fmt(fig.columns[3][0] - fig.columns[1][0]) + " dB");
}

// 11. One million hops over a fresh 79-channel map pass a chi-square
//     uniformity test at significance 0.001 (78 dof).
void criterion_uniformity() {
    const ChannelMap map(79, AfhConfig{});
    HopPrng prng(20260819);
    constexpr int kDraws = 1000000;
    std::vector<std::uint64_t> counts(79, 0);
    for (int i = 0; i < kDraws; ++i) {
        ++counts[static_cast<std::size_t>(next_hop(prng, map))];
    }
    const double expected = static_cast<double>(kDraws) / 79.0;
    double chi2 = 0.0;
    for (const auto c : counts) {
        const double diff = static_cast<double>(c) - expected;
        chi2 += diff * diff / expected;
    }
    const double critical = 122.34795378165677;  // chi2 upper 0.001, 78 dof
    report(11, "hop uniformity", chi2 < critical,
           "chi-square " + fmt(chi2) + " < " + fmt(critical));
}

}  // namespace

int main() {
    criterion_threshold();
    criterion_path_loss();
    criterion_processing_gain();
    criterion_scenario1();
    criterion_density();
    criterion_fig4_shape();
    criterion_power_conservation();
    criterion_oracle();
    criterion_determinism();
    criterion_fig3();
    criterion_uniformity();
    if (failures == 0) {
        std::printf("all 11 criteria passed\n");
    } else {
        std::printf("%d criteria FAILED\n", failures);
    }
    return failures;
}
