#include "gpe/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace gpe {

namespace {

// Samples with one zero ghost value on each side, so central differences and
// the Laplacian can be formed uniformly for both grid tags. For the periodic
// tag the ghosts wrap around instead.
Complex at_or_ghost(const WaveField& f, std::ptrdiff_t i) {
    const auto n = static_cast<std::ptrdiff_t>(f.values.size());
    if (f.tag == GridTag::Periodic) {
        const std::ptrdiff_t j = (i % n + n) % n;
        return f.values[static_cast<std::size_t>(j)];
    }
    if (i < 0 || i >= n) return Complex(0.0, 0.0);
    return f.values[static_cast<std::size_t>(i)];
}

}  // namespace

double mass(const WaveField& f, const SpaceGrid& grid) {
    return discrete_l2_sq(f, grid.dx);
}

Complex impulse(const WaveField& f, const SpaceGrid& grid) {
    const auto n = static_cast<std::ptrdiff_t>(f.values.size());
    Complex acc(0.0, 0.0);
    const double inv2dx = 1.0 / (2.0 * grid.dx);
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Complex du = (at_or_ghost(f, i + 1) - at_or_ghost(f, i - 1)) * inv2dx;
        acc += std::conj(f.values[static_cast<std::size_t>(i)]) * Complex(0.0, -1.0) * du;
    }
    return acc * grid.dx;
}

double energy_paper(const WaveField& f, const SpaceGrid& grid, const ModelParams& params) {
    const auto n = static_cast<std::ptrdiff_t>(f.values.size());
    const double inv_dx2 = 1.0 / (grid.dx * grid.dx);
    Complex acc(0.0, 0.0);
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Complex u = f.values[static_cast<std::size_t>(i)];
        const Complex lap = (at_or_ghost(f, i - 1) - 2.0 * u + at_or_ghost(f, i + 1)) * inv_dx2;
        const double w = u.real() * u.real() + u.imag() * u.imag();
        const Complex hu = -0.5 * lap + params.g * w * u;
        acc += std::conj(u) * hu;
    }
    return 0.5 * grid.dx * acc.real();
}

double energy_std(const WaveField& f, const SpaceGrid& grid, const ModelParams& params) {
    const auto n = static_cast<std::ptrdiff_t>(f.values.size());
    const double inv2dx = 1.0 / (2.0 * grid.dx);
    double acc = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Complex du = (at_or_ghost(f, i + 1) - at_or_ghost(f, i - 1)) * inv2dx;
        const double w = std::norm(f.values[static_cast<std::size_t>(i)]);
        acc += 0.5 * std::norm(du) + 0.5 * params.g * w * w;
    }
    return grid.dx * acc;
}

double spacetime_error_sq(const FieldSeries& a, const FieldSeries& b,
                          const SpaceGrid& grid, const TimeMesh& mesh) {
    if (a.times.size() != b.times.size() || a.fields.size() != b.fields.size() ||
        a.times.size() != a.fields.size()) {
        throw std::invalid_argument("spacetime_error_sq: series shapes differ");
    }
    double total = 0.0;
    for (std::size_t k = 0; k < a.times.size(); ++k) {
        if (std::abs(a.times[k] - b.times[k]) > 1e-12 * std::max(1.0, mesh.final_time)) {
            throw std::invalid_argument("spacetime_error_sq: recorded times differ");
        }
        if (a.fields[k].values.size() != b.fields[k].values.size()) {
            throw std::invalid_argument("spacetime_error_sq: field sizes differ");
        }
        if (a.times[k] <= 0.0) continue;  // the n = 0 level is excluded
        double level = 0.0;
        for (std::size_t i = 0; i < a.fields[k].values.size(); ++i) {
            level += std::norm(a.fields[k].values[i] - b.fields[k].values[i]);
        }
        total += level;
    }
    return mesh.dt * grid.dx * total;
}

double spacetime_error(const FieldSeries& a, const FieldSeries& b,
                       const SpaceGrid& grid, const TimeMesh& mesh) {
    return std::sqrt(spacetime_error_sq(a, b, grid, mesh));
}

}  // namespace gpe
