#include "gpe/solitons.hpp"

#include <cmath>
#include <stdexcept>

namespace gpe {

namespace {

double sech(double x) { return 1.0 / std::cosh(x); }

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

double soliton_amplitude(double density_speed, double phase_speed, double g) {
    if (g == 0.0) {
        throw std::invalid_argument("soliton_amplitude: g must be nonzero");
    }
    const double radicand = (density_speed * density_speed - 2.0 * phase_speed) /
                            (2.0 * std::abs(g));
    if (radicand <= 0.0) {
        throw std::invalid_argument("soliton_amplitude: speeds give no bright soliton");
    }
    return std::sqrt(radicand);
}

Complex exact_single_soliton(double x, double t) {
    const double envelope = sech((x - t / 10.0 - 25.0) * kInvSqrt2);
    const double phase = x / 20.0 + 199.0 * t / 400.0;
    return envelope * Complex(std::cos(phase), std::sin(phase));
}

WaveField initial_single_soliton(const SpaceGrid& grid, GridTag tag) {
    WaveField f;
    f.tag = tag;
    const std::size_t n = field_size(tag, grid);
    f.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        f.values[i] = exact_single_soliton(sample_point(f, grid, i), 0.0);
    }
    return f;
}

WaveField initial_two_solitons(const SpaceGrid& grid, GridTag tag, bool symmetric_widths) {
    WaveField f;
    f.tag = tag;
    const std::size_t n = field_size(tag, grid);
    f.values.resize(n);
    const double left_width = symmetric_widths ? kInvSqrt2 : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = sample_point(f, grid, i);
        const Complex right = sech((x - 20.0) * kInvSqrt2) *
                              Complex(std::cos(x / 20.0), -std::sin(x / 20.0));
        const Complex left = sech((x + 20.0) * left_width) *
                             Complex(std::cos(x / 20.0), std::sin(x / 20.0));
        f.values[i] = right + left;
    }
    return f;
}

}  // namespace gpe
