#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gpe/spectral.hpp"
#include "oracles.hpp"

using namespace gpe;

namespace {

double max_abs_diff(const ComplexVec& a, const ComplexVec& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace

TEST_CASE("mode bookkeeping is a consistent bijection") {
    for (int m : {4, 8, 122}) {
        for (int l = -m / 2; l < m / 2; ++l) {
            CHECK(mode_number(bin_of_mode(l, m), m) == l);
        }
        CHECK(mode_number(0, m) == 0);
        CHECK(mode_number(m / 2, m) == -m / 2);
    }
    CHECK(mode_wavenumber(3, 40.0) == doctest::Approx(3.0 * M_PI / 40.0));
}

TEST_CASE("dft_forward of the zero field is zero") {
    const SpaceGrid g = build_grid(5.0, 16);
    WaveField f;
    f.tag = GridTag::Periodic;
    f.values.assign(16, Complex(0.0, 0.0));
    const SpectralField hat = dft_forward(f, g);
    for (const Complex& c : hat.coeffs) CHECK(std::abs(c) == 0.0);
}

TEST_CASE("a pure mode transforms to a single coefficient M at l = 1") {
    const SpaceGrid g = build_grid(5.0, 32);
    const double mu1 = mode_wavenumber(1, g.half_width);
    WaveField f;
    f.tag = GridTag::Periodic;
    f.values.resize(32);
    for (int j = 0; j < 32; ++j) {
        const double arg = mu1 * (g.points[j] - g.half_width);
        f.values[j] = Complex(std::cos(arg), std::sin(arg));
    }
    const SpectralField hat = dft_forward(f, g);
    const ComplexVec direct = oracles::direct_dft(f.values, g);
    CHECK(max_abs_diff(hat.coeffs, direct) < 1e-10 * 32);
    CHECK(std::abs(hat.coeffs[bin_of_mode(1, 32)] - Complex(32.0, 0.0)) < 1e-10 * 32);
    for (int bin = 0; bin < 32; ++bin) {
        if (bin == bin_of_mode(1, 32)) continue;
        CHECK(std::abs(hat.coeffs[bin]) < 1e-10 * 32);
    }
}

TEST_CASE("dft_forward equals the literal mode sum on random data") {
    std::mt19937 rng(31);
    for (int m : {16, 50, 64}) {
        const SpaceGrid g = build_grid(7.0, m);
        const WaveField f = oracles::random_field(rng, GridTag::Periodic, m);
        const SpectralField hat = dft_forward(f, g);
        const ComplexVec direct = oracles::direct_dft(f.values, g);
        CHECK(max_abs_diff(hat.coeffs, direct) < 1e-9 * m);
    }
}

TEST_CASE("round trip reproduces the input to 1e-12") {
    std::mt19937 rng(32);
    const SpaceGrid g = build_grid(9.0, 128);
    const WaveField f = oracles::random_field(rng, GridTag::Periodic, 128);
    const WaveField back = dft_inverse(dft_forward(f, g), g);
    double worst = max_abs_diff(f.values, back.values);
    double scale = 0.0;
    for (const Complex& v : f.values) scale = std::max(scale, std::abs(v));
    CHECK(worst <= 1e-12 * scale);
}

TEST_CASE("Parseval: ||f||^2 * M = dx * sum |u_hat|^2 within 1e-12") {
    std::mt19937 rng(33);
    const SpaceGrid g = build_grid(11.0, 64);
    const WaveField f = oracles::random_field(rng, GridTag::Periodic, 64);
    const SpectralField hat = dft_forward(f, g);
    double coeff_sq = 0.0;
    for (const Complex& c : hat.coeffs) coeff_sq += std::norm(c);
    const double lhs = discrete_l2_sq(f, g.dx);
    const double rhs = g.dx * coeff_sq / 64.0;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("linear_propagate with dt = 0 is the identity") {
    std::mt19937 rng(34);
    const SpaceGrid g = build_grid(6.0, 32);
    const WaveField f = oracles::random_field(rng, GridTag::Periodic, 32);
    const WaveField out = linear_propagate(f, 0.0, g);
    CHECK(max_abs_diff(f.values, out.values) < 1e-13);
}

TEST_CASE("linear_propagate multiplies a single mode by exp(-i mu^2 dt / 2)") {
    const SpaceGrid g = build_grid(5.0, 32);
    const int l = -5;
    const double mu = mode_wavenumber(l, g.half_width);
    WaveField f;
    f.tag = GridTag::Periodic;
    f.values.resize(32);
    for (int j = 0; j < 32; ++j) {
        const double arg = mu * (g.points[j] - g.half_width);
        f.values[j] = Complex(std::cos(arg), std::sin(arg));
    }
    const double dt = 0.37;
    const WaveField out = linear_propagate(f, dt, g);
    const Complex factor = std::polar(1.0, -mu * mu * dt / 2.0);
    for (int j = 0; j < 32; ++j) {
        CHECK(std::abs(out.values[j] - factor * f.values[j]) < 1e-12);
    }
}

TEST_CASE("linear_propagate preserves the discrete l2 norm") {
    std::mt19937 rng(35);
    const SpaceGrid g = build_grid(13.0, 64);
    const WaveField f = oracles::random_field(rng, GridTag::Periodic, 64);
    const WaveField out = linear_propagate(f, 1.7, g);
    CHECK(discrete_l2_sq(out, g.dx) ==
          doctest::Approx(discrete_l2_sq(f, g.dx)).epsilon(1e-12));
}

TEST_CASE("linear_propagate is an exact semigroup") {
    std::mt19937 rng(36);
    const SpaceGrid g = build_grid(8.0, 64);
    const WaveField f = oracles::random_field(rng, GridTag::Periodic, 64);
    const WaveField two_hops = linear_propagate(linear_propagate(f, 0.4, g), 0.35, g);
    const WaveField one_hop = linear_propagate(f, 0.75, g);
    double scale = 0.0;
    for (const Complex& v : f.values) scale = std::max(scale, std::abs(v));
    CHECK(max_abs_diff(two_hops.values, one_hop.values) <= 1e-12 * scale);
}

TEST_CASE("linear_propagate reproduces the dispersing free Gaussian") {
    // closed form for i u_t = -(1/2) u_xx with u(x,0) = exp(-x^2 / (2 a)):
    // u(x,t) = sqrt(a / (a + i t)) exp(-x^2 / (2 (a + i t)))
    const SpaceGrid g = build_grid(40.0, 512);
    const double a = 2.0;
    WaveField f;
    f.tag = GridTag::Periodic;
    f.values.resize(512);
    for (int j = 0; j < 512; ++j) {
        const double x = g.points[j];
        f.values[j] = Complex(std::exp(-x * x / (2.0 * a)), 0.0);
    }
    const double t = 1.25;
    const WaveField out = linear_propagate(f, t, g);
    const Complex denom(a, t);
    double worst = 0.0;
    for (int j = 0; j < 512; ++j) {
        const double x = g.points[j];
        const Complex expected = std::sqrt(a / denom) * std::exp(-x * x / (2.0 * denom));
        worst = std::max(worst, std::abs(out.values[j] - expected));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("nonlinear_phase examples and exactness") {
    WaveField zero;
    zero.values.assign(8, Complex(0.0, 0.0));
    const WaveField z = nonlinear_phase(zero, -1.0, 0.5);
    for (const Complex& v : z.values) CHECK(std::abs(v) == 0.0);

    // u = 1, g = -1, dt = pi: exp(i pi) = -1
    WaveField one;
    one.values = {Complex(1.0, 0.0)};
    const WaveField rotated = nonlinear_phase(one, -1.0, M_PI);
    CHECK(std::abs(rotated.values[0] - Complex(-1.0, 0.0)) < 1e-15);

    std::mt19937 rng(37);
    const WaveField f = oracles::random_field(rng, GridTag::Periodic, 64);
    const WaveField out = nonlinear_phase(f, -1.0, 0.618);
    const auto before = abs_squared(f);
    const auto after = abs_squared(out);
    for (std::size_t i = 0; i < before.size(); ++i) {
        CHECK(std::abs(after[i] - before[i]) <= 1e-15 * std::max(1.0, before[i]));
    }
}

TEST_CASE("nonlinear_phase half-steps compose into the full step exactly") {
    std::mt19937 rng(38);
    const WaveField f = oracles::random_field(rng, GridTag::Periodic, 64);
    const WaveField half_half = nonlinear_phase(nonlinear_phase(f, -1.0, 0.3), -1.0, 0.3);
    const WaveField full = nonlinear_phase(f, -1.0, 0.6);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        CHECK(std::abs(half_half.values[i] - full.values[i]) <=
              1e-14 * std::max(1.0, std::abs(full.values[i])));
    }
}
