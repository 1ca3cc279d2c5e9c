#pragma once

#include "fhjam/scenario.hpp"
#include "fhjam/units.hpp"

namespace fhjam {

/// Path-loss frequency used for the jammer signal unless per-channel
/// evaluation is requested; the spread across 2402..2480 MHz is under 0.3 dB.
inline constexpr double kRepresentativeFreqMhz = 2440.0;

/// Propagation attenuation in dB.
///
/// PaperLiteral: 32.4 + 20*log10(D meters) + 20*log10(F MHz).
/// PhysicalFspl: 32.44 + 20*log10(D kilometers) + 20*log10(F MHz), the
/// standard free-space formula.
DecibelGain path_loss_db(double distance_m, double freq_mhz, PropagationMode mode);

/// tx minus path loss.
PowerDbm received_power_dbm(PowerDbm tx, double distance_m, double freq_mhz,
                            PropagationMode mode);

/// Minimum received jamming level that defeats the link:
/// sensitivity + processing gain + margin. Ties count as jammed (compare
/// received >= threshold).
PowerDbm jamming_threshold_dbm(PowerDbm sensitivity, DecibelGain pg, DecibelGain margin);

/// Distance at which a per-channel jamming density attenuates exactly to the
/// threshold; the closed-form inverse of received_power_dbm in D.
double effective_range_m(PowerDbm channel_density, PowerDbm threshold,
                         double freq_mhz, PropagationMode mode);

}  // namespace fhjam
