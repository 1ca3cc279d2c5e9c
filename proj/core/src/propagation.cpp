#include "fhjam/propagation.hpp"

#include <cmath>
#include <stdexcept>

namespace fhjam {

DecibelGain path_loss_db(double distance_m, double freq_mhz, PropagationMode mode) {
    if (!(distance_m > 0.0)) {
        throw std::domain_error("path_loss_db: distance must be positive");
    }
    if (!(freq_mhz > 0.0)) {
        throw std::domain_error("path_loss_db: frequency must be positive");
    }
    switch (mode) {
        case PropagationMode::PaperLiteral:
            return {32.4 + 20.0 * std::log10(distance_m) + 20.0 * std::log10(freq_mhz)};
        case PropagationMode::PhysicalFspl:
            return {32.44 + 20.0 * std::log10(distance_m / 1000.0) +
                    20.0 * std::log10(freq_mhz)};
    }
    throw std::logic_error("path_loss_db: unknown mode");
}

PowerDbm received_power_dbm(PowerDbm tx, double distance_m, double freq_mhz,
                            PropagationMode mode) {
    return tx - path_loss_db(distance_m, freq_mhz, mode);
}

PowerDbm jamming_threshold_dbm(PowerDbm sensitivity, DecibelGain pg, DecibelGain margin) {
    return sensitivity + pg + margin;
}

double effective_range_m(PowerDbm channel_density, PowerDbm threshold,
                         double freq_mhz, PropagationMode mode) {
    const double budget = channel_density.value - threshold.value;
    switch (mode) {
        case PropagationMode::PaperLiteral:
            return std::pow(10.0, (budget - 32.4 - 20.0 * std::log10(freq_mhz)) / 20.0);
        case PropagationMode::PhysicalFspl:
            return 1000.0 *
                   std::pow(10.0, (budget - 32.44 - 20.0 * std::log10(freq_mhz)) / 20.0);
    }
    throw std::logic_error("effective_range_m: unknown mode");
}

}  // namespace fhjam
