#pragma once

#include "gpe/field.hpp"
#include "gpe/grid.hpp"

namespace gpe {

/// Bright-soliton parameters: density-profile speed, phase-profile speed,
/// amplitude, initial center.
struct SolitonParams {
    double density_speed = 0.1;     // v_d
    double phase_speed = -0.995;    // v_p
    double amplitude = 1.0;         // A0
    double center = 25.0;           // x0
};

/// A0 = sqrt((v_d^2 - 2 v_p) / (2 |g|)). Throws std::invalid_argument when
/// the radicand is not positive or g = 0.
double soliton_amplitude(double density_speed, double phase_speed, double g);

/// The validation soliton of i u_t = -u_xx - |u|^2 u:
///
///   u(x,t) = sech((x - t/10 - 25)/sqrt(2)) * exp(i (x/20 + 199 t/400)).
///
/// Envelope speed 1/10, phase gradient 1/20, unit amplitude; satisfies the
/// equation identically (checked by the residual oracle in the tests).
Complex exact_single_soliton(double x, double t);

/// Samples exact_single_soliton(., 0) on the grid under the given tag.
WaveField initial_single_soliton(const SpaceGrid& grid, GridTag tag);

/// Two counter-propagating pulses
///   sech((x-20)/sqrt(2)) exp(-i x/20) + sech(x+20) exp(i x/20).
/// The second pulse keeps its printed width; symmetric_widths = true applies
/// the 1/sqrt(2) factor to it as well, which makes both pulses exact soliton
/// profiles.
WaveField initial_two_solitons(const SpaceGrid& grid, GridTag tag,
                               bool symmetric_widths = false);

}  // namespace gpe
