#include <cmath>

#include "doctest.h"
#include "fhjam/jammer.hpp"
#include "fhjam/units.hpp"

using namespace fhjam;

namespace {

JammerSpec sweep_spec(double bandwidth_mhz, double dwell_s) {
    JammerSpec j;
    j.kind = JammerKind::Sweep;
    j.bandwidth_mhz = bandwidth_mhz;
    j.sweep_dwell_s = dwell_s;
    return j;
}

}  // namespace

TEST_SUITE("jammer") {

TEST_CASE("initial occupancy per kind") {
    const BluetoothLinkSpec link;

    SUBCASE("full barrage covers the band") {
        JammerSpec j;  // barrage, 79 MHz
        const JammerState state = make_jammer_state(j, link);
        CHECK(state.width == 79);
        CHECK(state.num_positions == 1);
        CHECK(state.block_start == 0);
        CHECK(occupied(state, 0));
        CHECK(occupied(state, 78));
    }
    SUBCASE("sub-band barrage centers on the band") {
        JammerSpec j;
        j.kind = JammerKind::SubBandBarrage;
        j.bandwidth_mhz = 20.0;
        const JammerState state = make_jammer_state(j, link);
        CHECK(state.width == 20);
        CHECK(state.block_start == 30);
        const auto channels = occupied_channels(state);
        CHECK(channels.size() == 20);
        CHECK(channels.front() == 30);
        CHECK(channels.back() == 49);
        CHECK_FALSE(occupied(state, 29));
        CHECK(occupied(state, 30));
        CHECK(occupied(state, 49));
        CHECK_FALSE(occupied(state, 50));
    }
    SUBCASE("explicit anchor wins over centering") {
        JammerSpec j;
        j.kind = JammerKind::SubBandBarrage;
        j.bandwidth_mhz = 20.0;
        j.anchor = 10;
        CHECK(make_jammer_state(j, link).block_start == 10);
    }
    SUBCASE("centered 5 MHz block and 8-channel band") {
        JammerSpec j;
        j.kind = JammerKind::SubBandBarrage;
        j.bandwidth_mhz = 5.0;
        CHECK(subband_anchor(j, link) == 37);

        BluetoothLinkSpec small;
        small.num_channels = 8;
        j.bandwidth_mhz = 3.0;
        CHECK(subband_anchor(j, small) == 3);
    }
    SUBCASE("sweep starts at the bottom of the band") {
        const JammerState state = make_jammer_state(sweep_spec(5.0, ms_to_s(13.125)), link);
        CHECK(state.width == 5);
        CHECK(state.num_positions == 75);
        CHECK(state.block_start == 0);
        CHECK(state.elapsed_s == 0.0);
    }
}

TEST_CASE("per-channel density concentrates with shrinking bandwidth") {
    JammerSpec j;
    j.total_power_w = 1.0;
    j.bandwidth_mhz = 79.0;
    const double d79 = per_channel_density_dbm(j, 1.0).value;
    j.bandwidth_mhz = 20.0;
    const double d20 = per_channel_density_dbm(j, 1.0).value;
    j.bandwidth_mhz = 5.0;
    const double d5 = per_channel_density_dbm(j, 1.0).value;

    CHECK(d79 == doctest::Approx(11.023729087095585).epsilon(1e-12));
    CHECK(d20 == doctest::Approx(16.989700043360187).epsilon(1e-12));
    CHECK(d5 == doctest::Approx(23.010299956639813).epsilon(1e-12));
    CHECK(d79 < d20);
    CHECK(d20 < d5);

    j.total_power_w = 5.0;
    CHECK(per_channel_density_dbm(j, 1.0).value == doctest::Approx(30.0).epsilon(1e-12));
    j.bandwidth_mhz = 20.0;
    CHECK(per_channel_density_dbm(j, 1.0).value ==
          doctest::Approx(23.979400086720375).epsilon(1e-12));
    j.total_power_w = 2.0;
    CHECK(per_channel_density_dbm(j, 1.0).value == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("occupied densities sum back to the total power") {
    const BluetoothLinkSpec link;
    for (const double bw : {79.0, 20.0, 5.0}) {
        for (const double watts : {1.0, 2.0, 5.0}) {
            JammerSpec j;
            j.kind = bw == 79.0 ? JammerKind::BarrageFull : JammerKind::SubBandBarrage;
            j.bandwidth_mhz = bw;
            j.total_power_w = watts;
            const int width = j.width_channels(link.channel_bw_mhz);
            const double mw_per_channel = dbm_to_mw(per_channel_density_dbm(j, 1.0));
            const double total_mw = width * mw_per_channel;
            CHECK(total_mw == doctest::Approx(watts * 1000.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("sweep stepping follows elapsed dwell counts") {
    const BluetoothLinkSpec link;
    const double dwell = 10 * link.slot_duration_s;  // 6.25 ms
    const JammerState start = make_jammer_state(sweep_spec(5.0, dwell), link);

    SUBCASE("one dwell advances one position") {
        const JammerState s1 = advance_sweep(start, dwell);
        CHECK(s1.block_start == 1);
        CHECK(s1.elapsed_s == dwell);
    }
    SUBCASE("partial dwells accumulate") {
        const JammerState half = advance_sweep(start, dwell / 2.0);
        CHECK(half.block_start == 0);
        const JammerState full = advance_sweep(half, dwell / 2.0);
        CHECK(full.block_start == 1);
    }
    SUBCASE("chunked advance equals one big advance") {
        // Dyadic durations accumulate without rounding, so the decomposition
        // property holds bit for bit, elapsed time included.
        const double dy_dwell = 0.0078125;           // 2^-7 s
        const double dy_dt = dy_dwell / 16.0;        // 2^-11 s
        const JammerState dy_start = make_jammer_state(sweep_spec(5.0, dy_dwell), link);
        JammerState chunked = dy_start;
        for (int i = 0; i < 64; ++i) {
            chunked = advance_sweep(chunked, dy_dt);
        }
        const JammerState whole = advance_sweep(dy_start, 64.0 * dy_dt);
        CHECK(chunked == whole);
        CHECK(chunked.block_start == 4);
    }
    SUBCASE("wraps back to position zero") {
        const JammerState wrapped = advance_sweep(start, 75.0 * dwell);
        CHECK(wrapped.block_start == 0);
        const JammerState once_more = advance_sweep(start, 76.0 * dwell);
        CHECK(once_more.block_start == 1);
    }
    SUBCASE("zero step leaves the position alone") {
        const JammerState same = advance_sweep(start, 0.0);
        CHECK(same.block_start == 0);
        CHECK(same.elapsed_s == 0.0);
    }
    SUBCASE("only sweeps can advance") {
        const JammerState barrage = make_jammer_state(JammerSpec{}, link);
        CHECK_THROWS_AS(advance_sweep(barrage, 1.0), std::logic_error);
        CHECK_THROWS_AS(advance_sweep(start, -1.0), std::domain_error);
    }
}

TEST_CASE("received level is density minus path loss inside the block") {
    const BluetoothLinkSpec link;

    SUBCASE("scenario-1 barrage at 10 m, literal formula") {
        JammerSpec j;  // 1 W, 79 MHz, 10 m
        const JammerState state = make_jammer_state(j, link);
        const auto rx = jammer_rx_dbm(state, 39, link, PropagationMode::PaperLiteral);
        REQUIRE(rx.has_value());
        CHECK(rx->value == doctest::Approx(-109.124067439679).epsilon(1e-12));
    }
    SUBCASE("scenario-2 sub-band at 10 m, free-space model") {
        JammerSpec j;
        j.kind = JammerKind::SubBandBarrage;
        j.bandwidth_mhz = 20.0;
        const JammerState state = make_jammer_state(j, link);
        const auto rx = jammer_rx_dbm(state, 40, link, PropagationMode::PhysicalFspl);
        REQUIRE(rx.has_value());
        CHECK(rx->value == doctest::Approx(-43.1980964834144).epsilon(1e-12));
        CHECK_FALSE(jammer_rx_dbm(state, 0, link, PropagationMode::PhysicalFspl)
                        .has_value());
    }
    SUBCASE("per-channel carrier frequency shifts the loss slightly") {
        JammerSpec j;
        const JammerState state = make_jammer_state(j, link);
        const auto nominal =
            jammer_rx_dbm(state, 0, link, PropagationMode::PaperLiteral, false);
        const auto edge =
            jammer_rx_dbm(state, 0, link, PropagationMode::PaperLiteral, true);
        REQUIRE(nominal.has_value());
        REQUIRE(edge.has_value());
        // Channel 0 sits at 2402 MHz, below the 2440 MHz reference, so it
        // loses slightly less.
        CHECK(edge->value > nominal->value);
        CHECK(edge->value - nominal->value ==
              doctest::Approx(20.0 * std::log10(2440.0 / 2402.0)).epsilon(1e-12));
    }
}

}  // TEST_SUITE
