#include "doctest.h"
#include "fhjam/units.hpp"

using namespace fhjam;

TEST_SUITE("units") {

TEST_CASE("watts_to_dbm on round powers") {
    CHECK(watts_to_dbm(1.0).value == 30.0);
    CHECK(watts_to_dbm(2.0).value == doctest::Approx(33.01029995663981).epsilon(1e-12));
    CHECK(watts_to_dbm(5.0).value == doctest::Approx(36.98970004336019).epsilon(1e-12));
    CHECK(watts_to_dbm(0.001).value == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("mw_to_dbm and dbm_to_mw invert each other") {
    CHECK(mw_to_dbm(1.0).value == 0.0);
    CHECK(dbm_to_mw(PowerDbm{-48.0}) ==
          doctest::Approx(1.584893192461114e-05).epsilon(1e-12));
    for (double mw : {0.5, 1.0, 2.0, 17.25, 5000.0}) {
        CHECK(dbm_to_mw(mw_to_dbm(mw)) == doctest::Approx(mw).epsilon(1e-12));
    }
}

TEST_CASE("non-positive powers are rejected") {
    CHECK_THROWS_AS(watts_to_dbm(0.0), std::domain_error);
    CHECK_THROWS_AS(watts_to_dbm(-1.0), std::domain_error);
    CHECK_THROWS_AS(mw_to_dbm(0.0), std::domain_error);
}

TEST_CASE("dB algebra") {
    const PowerDbm sens{-70.0};
    const DecibelGain pg{19.0};
    CHECK((sens + pg).value == -51.0);
    CHECK((sens - pg).value == -89.0);
    CHECK((PowerDbm{-48.0} - PowerDbm{-70.0}).value == 22.0);
    CHECK((DecibelGain{19.0} + DecibelGain{3.0}).value == 22.0);
    CHECK((DecibelGain{19.0} - DecibelGain{3.0}).value == 16.0);
    CHECK(PowerDbm{-48.0} > PowerDbm{-70.0});
    CHECK(DecibelGain{3.0} < DecibelGain{19.0});
}

TEST_CASE("time conversions round-trip exactly") {
    CHECK(s_to_us(us_to_s(625.0)) == 625.0);
    CHECK(us_to_s(625.0) == 625e-6);
    CHECK(s_to_ms(ms_to_s(13.125)) == 13.125);
    CHECK(ms_to_s(13.125) / us_to_s(625.0) == 21.0);
}

}  // TEST_SUITE
