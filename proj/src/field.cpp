#include "gpe/field.hpp"

#include <cmath>
#include <stdexcept>

namespace gpe {

std::size_t field_size(GridTag tag, const SpaceGrid& grid) {
    const auto m = static_cast<std::size_t>(grid.intervals);
    return tag == GridTag::Periodic ? m : m - 1;
}

double sample_point(const WaveField& f, const SpaceGrid& grid, std::size_t i) {
    const std::size_t j = (f.tag == GridTag::Periodic) ? i : i + 1;
    return grid.points[j];
}

std::vector<double> abs_squared(const WaveField& f) {
    std::vector<double> out(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const Complex& u = f.values[i];
        out[i] = u.real() * u.real() + u.imag() * u.imag();
    }
    return out;
}

double discrete_l2_sq(const WaveField& f, double dx) {
    double s = 0.0;
    for (const Complex& u : f.values) {
        s += u.real() * u.real() + u.imag() * u.imag();
    }
    return dx * s;
}

double discrete_l2_dist(const WaveField& a, const WaveField& b, double dx) {
    if (a.values.size() != b.values.size()) {
        throw std::invalid_argument("discrete_l2_dist: size mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const Complex d = a.values[i] - b.values[i];
        s += d.real() * d.real() + d.imag() * d.imag();
    }
    return std::sqrt(dx * s);
}

bool all_finite(const WaveField& f) {
    for (const Complex& u : f.values) {
        if (!std::isfinite(u.real()) || !std::isfinite(u.imag())) return false;
    }
    return true;
}

WaveField to_periodic(const WaveField& f, const SpaceGrid& grid) {
    if (f.tag == GridTag::Periodic) return f;
    const auto m = static_cast<std::size_t>(grid.intervals);
    if (f.values.size() != m - 1) {
        throw std::invalid_argument("to_periodic: field does not match grid");
    }
    WaveField out;
    out.tag = GridTag::Periodic;
    out.values.resize(m, Complex(0.0, 0.0));
    for (std::size_t j = 1; j < m; ++j) out.values[j] = f.values[j - 1];
    return out;
}

WaveField to_interior(const WaveField& f, const SpaceGrid& grid) {
    if (f.tag == GridTag::InteriorDirichlet) return f;
    const auto m = static_cast<std::size_t>(grid.intervals);
    if (f.values.size() != m) {
        throw std::invalid_argument("to_interior: field does not match grid");
    }
    WaveField out;
    out.tag = GridTag::InteriorDirichlet;
    out.values.assign(f.values.begin() + 1, f.values.end());
    return out;
}

}  // namespace gpe
