#include "gpe/linops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpe {

Tridiag laplacian(const SpaceGrid& grid) {
    const auto n = static_cast<std::size_t>(grid.intervals) - 1;
    const double w = 1.0 / (grid.dx * grid.dx);
    Tridiag a;
    a.sub.assign(n - 1, Complex(w, 0.0));
    a.diag.assign(n, Complex(-2.0 * w, 0.0));
    a.sup.assign(n - 1, Complex(w, 0.0));
    return a;
}

Tridiag laplacian_half(const SpaceGrid& grid) {
    return scaled(laplacian(grid), Complex(0.5, 0.0));
}

DiagOp nonlinear_diag(const WaveField& f) {
    return DiagOp{abs_squared(f)};
}

ComplexVec apply_tridiag(const Tridiag& a, const ComplexVec& x) {
    const std::size_t n = a.size();
    if (x.size() != n) {
        throw std::invalid_argument("tridiag apply: size mismatch");
    }
    ComplexVec y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex v = a.diag[i] * x[i];
        if (i > 0) v += a.sub[i - 1] * x[i - 1];
        if (i + 1 < n) v += a.sup[i] * x[i + 1];
        y[i] = v;
    }
    return y;
}

Tridiag scaled(const Tridiag& a, Complex s) {
    Tridiag out = a;
    for (auto& v : out.sub) v *= s;
    for (auto& v : out.diag) v *= s;
    for (auto& v : out.sup) v *= s;
    return out;
}

ComplexVec thomas_solve(const Tridiag& a, const ComplexVec& b) {
    const std::size_t n = a.size();
    if (b.size() != n || a.sub.size() + 1 != n || a.sup.size() + 1 != n) {
        throw std::invalid_argument("thomas_solve: inconsistent sizes");
    }
    double scale = 0.0;
    for (const Complex& v : a.diag) scale = std::max(scale, std::abs(v));
    for (const Complex& v : a.sub) scale = std::max(scale, std::abs(v));
    for (const Complex& v : a.sup) scale = std::max(scale, std::abs(v));
    const double pivot_floor = 1e-14 * scale;

    ComplexVec c(n > 0 ? n - 1 : 0);  // eliminated superdiagonal
    ComplexVec d(n);                  // transformed right-hand side
    Complex pivot = a.diag[0];
    if (std::abs(pivot) < pivot_floor) {
        throw std::runtime_error("thomas_solve: singular pivot");
    }
    if (n > 1) c[0] = a.sup[0] / pivot;
    d[0] = b[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = a.diag[i] - a.sub[i - 1] * c[i - 1];
        if (std::abs(pivot) < pivot_floor) {
            throw std::runtime_error("thomas_solve: singular pivot");
        }
        if (i + 1 < n) c[i] = a.sup[i] / pivot;
        d[i] = (b[i] - a.sub[i - 1] * d[i - 1]) / pivot;
    }
    ComplexVec x(n);
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    return x;
}

}  // namespace gpe
