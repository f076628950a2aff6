#pragma once

#include <vector>

namespace gpe {

/// Uniform spatial mesh on [-L, L] with M intervals (M+1 nodes x_j = -L + j*dx).
///
/// M must be even: spectral operators index Fourier modes l = -M/2 .. M/2-1.
/// Finite-difference schemes act on the interior nodes j = 1..M-1 with
/// homogeneous Dirichlet values at j = 0 and j = M; spectral schemes act on
/// the M-point periodic grid j = 0..M-1.
struct SpaceGrid {
    double half_width = 0.0;      // L
    int intervals = 0;            // M
    double dx = 0.0;              // 2L/M
    std::vector<double> points;   // x_0 .. x_M (M+1 entries)

    int num_nodes() const { return intervals + 1; }
    double point(int j) const { return points[static_cast<std::size_t>(j)]; }
};

/// Uniform time mesh t_n = n*dt on [0, T], N steps.
struct TimeMesh {
    double final_time = 0.0;      // T
    int steps = 0;                // N
    double dt = 0.0;              // T/N

    double time_at(int n) const { return static_cast<double>(n) * dt; }
};

/// Builds the spatial mesh. Throws std::invalid_argument for L <= 0,
/// M < 4, or odd M.
SpaceGrid build_grid(double half_width, int intervals);

/// Builds the time mesh. Throws std::invalid_argument for T <= 0 or N < 1.
TimeMesh build_time_mesh(double final_time, int steps);

}  // namespace gpe
