#pragma once

#include "gpe/field.hpp"
#include "gpe/grid.hpp"

namespace gpe {

/// Discrete Fourier coefficients u_hat_l for modes l = -M/2 .. M/2-1.
///
/// Storage uses natural transform bin order k = 0..M-1; mode_number() maps a
/// bin to its symmetric mode index. Since exp(-2*pi*i*l*j/M) depends on l
/// only modulo M, bin k holds exactly the coefficient of mode l(k).
struct SpectralField {
    ComplexVec coeffs;  // bin order

    std::size_t size() const { return coeffs.size(); }
};

/// Symmetric mode index of transform bin k: k for k < M/2, else k - M.
int mode_number(int bin, int m);

/// Transform bin holding mode l in -M/2 .. M/2-1.
int bin_of_mode(int l, int m);

/// Continuous wavenumber mu_l = pi*l/L of mode l.
double mode_wavenumber(int l, double half_width);

/// Forward transform u_hat_l = sum_j u_j exp(-i mu_l (x_j - L)) of a
/// periodic-tagged field (size M).
SpectralField dft_forward(const WaveField& f, const SpaceGrid& grid);

/// Inverse transform u_j = (1/M) sum_l u_hat_l exp(i mu_l (x_j - L)).
WaveField dft_inverse(const SpectralField& sf, const SpaceGrid& grid);

/// Exact flow of i u_t = -(1/2) u_xx over dt: every mode is multiplied by
/// exp(-i mu_l^2 dt / 2). Preserves the discrete l2 norm.
WaveField linear_propagate(const WaveField& f, double dt, const SpaceGrid& grid);

/// Exact flow of i u_t = g |u|^2 u over dt: u_j <- exp(-i g |u_j|^2 dt) u_j.
/// Pointwise modulus is preserved exactly.
WaveField nonlinear_phase(const WaveField& f, double g, double dt);

}  // namespace gpe
