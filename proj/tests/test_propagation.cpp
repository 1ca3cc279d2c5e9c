#include <cmath>

#include "doctest.h"
#include "fhjam/propagation.hpp"

using namespace fhjam;

TEST_SUITE("propagation") {

TEST_CASE("literal-formula path loss at 2440 MHz") {
    CHECK(path_loss_db(10.0, 2440.0, PropagationMode::PaperLiteral).value ==
          doctest::Approx(120.14779652677458).epsilon(1e-12));
    CHECK(path_loss_db(6.0, 2440.0, PropagationMode::PaperLiteral).value ==
          doctest::Approx(115.71082153444746).epsilon(1e-12));
    CHECK(path_loss_db(0.5, 2440.0, PropagationMode::PaperLiteral).value ==
          doctest::Approx(94.12719661349496).epsilon(1e-12));
}

TEST_CASE("free-space path loss at 2440 MHz") {
    CHECK(path_loss_db(10.0, 2440.0, PropagationMode::PhysicalFspl).value ==
          doctest::Approx(60.18779652677459).epsilon(1e-12));
    // The two modes differ by a constant 59.96 dB (km vs m plus the constant).
    for (double d : {0.5, 1.0, 6.0, 10.0, 250.0}) {
        const double gap = path_loss_db(d, 2440.0, PropagationMode::PaperLiteral).value -
                           path_loss_db(d, 2440.0, PropagationMode::PhysicalFspl).value;
        CHECK(gap == doctest::Approx(59.96).epsilon(1e-12));
    }
}

TEST_CASE("20 dB per decade in distance and frequency") {
    for (const auto mode : {PropagationMode::PaperLiteral, PropagationMode::PhysicalFspl}) {
        for (double d : {0.3, 1.0, 7.5, 42.0}) {
            CHECK(path_loss_db(10.0 * d, 2440.0, mode).value -
                      path_loss_db(d, 2440.0, mode).value ==
                  doctest::Approx(20.0).epsilon(1e-12));
        }
        CHECK(path_loss_db(10.0, 24400.0, mode).value -
                  path_loss_db(10.0, 2440.0, mode).value ==
              doctest::Approx(20.0).epsilon(1e-12));
    }
}

TEST_CASE("received power subtracts path loss") {
    const PowerDbm rx =
        received_power_dbm(PowerDbm{0.0}, 10.0, 2440.0, PropagationMode::PaperLiteral);
    CHECK(rx.value == doctest::Approx(-120.14779652677458).epsilon(1e-12));
}

TEST_CASE("jamming threshold is sensitivity plus gain plus margin") {
    CHECK(jamming_threshold_dbm(PowerDbm{-70.0}, DecibelGain{19.0}, DecibelGain{3.0})
              .value == -48.0);
    CHECK(jamming_threshold_dbm(PowerDbm{-70.0}, DecibelGain{13.0}, DecibelGain{3.0})
              .value == -54.0);
}

TEST_CASE("effective range inverts the path-loss budget") {
    const PowerDbm density{30.0};
    const PowerDbm threshold{-48.0};
    const double r_paper =
        effective_range_m(density, threshold, 2440.0, PropagationMode::PaperLiteral);
    const double r_fspl =
        effective_range_m(density, threshold, 2440.0, PropagationMode::PhysicalFspl);
    CHECK(r_paper == doctest::Approx(0.07809265237554289).epsilon(1e-12));
    CHECK(r_fspl == doctest::Approx(77.73384922996497).epsilon(1e-12));

    // Path loss at the returned range must consume exactly the budget.
    for (double budget : {40.0, 78.0, 102.5, 131.0}) {
        for (const auto mode :
             {PropagationMode::PaperLiteral, PropagationMode::PhysicalFspl}) {
            const double r =
                effective_range_m(PowerDbm{budget}, PowerDbm{0.0}, 2440.0, mode);
            CHECK(path_loss_db(r, 2440.0, mode).value ==
                  doctest::Approx(budget).epsilon(1e-9));
        }
    }
}

TEST_CASE("non-positive geometry is rejected") {
    CHECK_THROWS_AS(path_loss_db(0.0, 2440.0, PropagationMode::PaperLiteral),
                    std::domain_error);
    CHECK_THROWS_AS(path_loss_db(-1.0, 2440.0, PropagationMode::PhysicalFspl),
                    std::domain_error);
    CHECK_THROWS_AS(path_loss_db(10.0, 0.0, PropagationMode::PaperLiteral),
                    std::domain_error);
}

}  // TEST_SUITE
