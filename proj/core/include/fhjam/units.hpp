#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>

namespace fhjam {

/// Absolute power level in decibel-milliwatts.
struct PowerDbm {
    double value = 0.0;

    friend auto operator<=>(const PowerDbm&, const PowerDbm&) = default;
};

/// Relative gain or loss in decibels.
struct DecibelGain {
    double value = 0.0;

    friend auto operator<=>(const DecibelGain&, const DecibelGain&) = default;
};

// dB arithmetic: absolute levels shift by gains, and the difference of two
// absolute levels is a gain.
inline PowerDbm operator+(PowerDbm p, DecibelGain g) { return {p.value + g.value}; }
inline PowerDbm operator-(PowerDbm p, DecibelGain g) { return {p.value - g.value}; }
inline DecibelGain operator-(PowerDbm a, PowerDbm b) { return {a.value - b.value}; }
inline DecibelGain operator+(DecibelGain a, DecibelGain b) { return {a.value + b.value}; }
inline DecibelGain operator-(DecibelGain a, DecibelGain b) { return {a.value - b.value}; }

inline PowerDbm watts_to_dbm(double watts) {
    if (!(watts > 0.0)) {
        throw std::domain_error("watts_to_dbm: power must be positive");
    }
    return {10.0 * std::log10(watts * 1000.0)};
}

inline PowerDbm mw_to_dbm(double milliwatts) {
    if (!(milliwatts > 0.0)) {
        throw std::domain_error("mw_to_dbm: power must be positive");
    }
    return {10.0 * std::log10(milliwatts)};
}

inline double dbm_to_mw(PowerDbm p) { return std::pow(10.0, p.value / 10.0); }

// Unit conversions used by the scenario file format. Defaults below are
// defined through these so that serialize/parse round-trips are exact.
constexpr double us_to_s(double us) { return us * 1e-6; }
constexpr double s_to_us(double s) { return s * 1e6; }
constexpr double ms_to_s(double ms) { return ms * 1e-3; }
constexpr double s_to_ms(double s) { return s * 1e3; }

}  // namespace fhjam
