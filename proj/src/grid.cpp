#include "gpe/grid.hpp"

#include <stdexcept>

namespace gpe {

SpaceGrid build_grid(double half_width, int intervals) {
    if (half_width <= 0.0) {
        throw std::invalid_argument("build_grid: half-width must be positive");
    }
    if (intervals < 4) {
        throw std::invalid_argument("build_grid: need at least 4 intervals");
    }
    if (intervals % 2 != 0) {
        throw std::invalid_argument("build_grid: interval count must be even");
    }
    SpaceGrid g;
    g.half_width = half_width;
    g.intervals = intervals;
    g.dx = 2.0 * half_width / static_cast<double>(intervals);
    g.points.resize(static_cast<std::size_t>(intervals) + 1);
    for (int j = 0; j <= intervals; ++j) {
        g.points[static_cast<std::size_t>(j)] = -half_width + static_cast<double>(j) * g.dx;
    }
    // pin the endpoints exactly
    g.points.front() = -half_width;
    g.points.back() = half_width;
    return g;
}

TimeMesh build_time_mesh(double final_time, int steps) {
    if (final_time <= 0.0) {
        throw std::invalid_argument("build_time_mesh: final time must be positive");
    }
    if (steps < 1) {
        throw std::invalid_argument("build_time_mesh: need at least one step");
    }
    TimeMesh m;
    m.final_time = final_time;
    m.steps = steps;
    m.dt = final_time / static_cast<double>(steps);
    return m;
}

}  // namespace gpe
