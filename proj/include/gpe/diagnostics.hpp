#pragma once

#include "gpe/field.hpp"
#include "gpe/grid.hpp"
#include "gpe/steppers_config.hpp"

namespace gpe {

/// Per-time-level functionals tracked during a run.
struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;            // N(t) = integral |u|^2
    double impulse_re = 0.0;      // Re P(t), the physical impulse
    double impulse_im = 0.0;      // Im P(t), discretization residue
    double energy_paper = 0.0;    // (1/2) integral conj(u) (-(1/2)u_xx + g|u|^2 u)
    double energy_std = 0.0;      // integral (1/2)|u_x|^2 + (g/2)|u|^4
    double l2err_sq_accum = 0.0;  // running dt*dx*sum |u - ref|^2
};

/// Trapezoid quadrature of |u|^2.
double mass(const WaveField& f, const SpaceGrid& grid);

/// P = integral conj(u) (-i d/dx) u with central differences. The real part
/// is the physical impulse; a small imaginary residue is reported rather
/// than discarded.
Complex impulse(const WaveField& f, const SpaceGrid& grid);

/// E = (1/2) integral conj(u) (-(1/2) u_xx + g |u|^2 u) using the
/// finite-difference Laplacian; returns the real part.
double energy_paper(const WaveField& f, const SpaceGrid& grid, const ModelParams& params);

/// Integral of (1/2)|u_x|^2 + (g/2)|u|^4 with central differences.
double energy_std(const WaveField& f, const SpaceGrid& grid, const ModelParams& params);

/// Space-time error, squared form:
///   dt * dx * sum_n sum_i |a(x_i, t_n) - b(x_i, t_n)|^2
/// over the recorded levels (t = 0 excluded). Series must be sampled on
/// identical meshes; mismatch throws std::invalid_argument.
double spacetime_error_sq(const FieldSeries& a, const FieldSeries& b,
                          const SpaceGrid& grid, const TimeMesh& mesh);

/// sqrt of spacetime_error_sq, the conventional space-time L2 norm.
double spacetime_error(const FieldSeries& a, const FieldSeries& b,
                       const SpaceGrid& grid, const TimeMesh& mesh);

}  // namespace gpe
