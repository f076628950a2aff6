#include "gpe/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gpe {

namespace {

// FFTW plans are cached per length and direction. Plan creation is not
// thread-safe and is serialized; execution uses the new-array interface on
// fftw_malloc'd buffers, which share the alignment the plans were built with.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int n, int sign) {
        std::scoped_lock lock(mutex_);
        auto& table = (sign == FFTW_FORWARD) ? forward_ : backward_;
        auto it = table.find(n);
        if (it != table.end()) return it->second;
        fftw_complex* buf = fftw_alloc_complex(static_cast<std::size_t>(n));
        if (buf == nullptr) throw std::bad_alloc();
        fftw_plan plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE);
        fftw_free(buf);
        if (plan == nullptr) throw std::runtime_error("fftw plan creation failed");
        table.emplace(n, plan);
        return plan;
    }

private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<int, fftw_plan> forward_;
    std::map<int, fftw_plan> backward_;
};

struct FftwBuffer {
    explicit FftwBuffer(std::size_t n) : data(fftw_alloc_complex(n)) {
        if (data == nullptr) throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
    fftw_complex* data;
};

ComplexVec transform(const ComplexVec& in, int sign) {
    const int n = static_cast<int>(in.size());
    FftwBuffer buf(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        buf.data[i][0] = in[i].real();
        buf.data[i][1] = in[i].imag();
    }
    fftw_execute_dft(PlanCache::instance().get(n, sign), buf.data, buf.data);
    ComplexVec out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        out[i] = Complex(buf.data[i][0], buf.data[i][1]);
    }
    return out;
}

void require_periodic(const WaveField& f, const SpaceGrid& grid, const char* who) {
    if (f.tag != GridTag::Periodic ||
        f.values.size() != static_cast<std::size_t>(grid.intervals)) {
        throw std::invalid_argument(std::string(who) + ": needs a periodic M-point field");
    }
}

}  // namespace

int mode_number(int bin, int m) {
    return bin < m / 2 ? bin : bin - m;
}

int bin_of_mode(int l, int m) {
    return l >= 0 ? l : l + m;
}

double mode_wavenumber(int l, double half_width) {
    return M_PI * static_cast<double>(l) / half_width;
}

SpectralField dft_forward(const WaveField& f, const SpaceGrid& grid) {
    require_periodic(f, grid, "dft_forward");
    // exp(-i mu_l (x_j - L)) = exp(-2 pi i l j / M) since exp(2 pi i l) = 1,
    // so the sum is the plain DFT and bin k carries mode l(k).
    return SpectralField{transform(f.values, FFTW_FORWARD)};
}

WaveField dft_inverse(const SpectralField& sf, const SpaceGrid& grid) {
    if (sf.coeffs.size() != static_cast<std::size_t>(grid.intervals)) {
        throw std::invalid_argument("dft_inverse: coefficient count does not match grid");
    }
    WaveField out;
    out.tag = GridTag::Periodic;
    out.values = transform(sf.coeffs, FFTW_BACKWARD);
    const double inv_m = 1.0 / static_cast<double>(grid.intervals);
    for (Complex& v : out.values) v *= inv_m;
    return out;
}

WaveField linear_propagate(const WaveField& f, double dt, const SpaceGrid& grid) {
    require_periodic(f, grid, "linear_propagate");
    const int m = grid.intervals;
    SpectralField hat = dft_forward(f, grid);
    for (int k = 0; k < m; ++k) {
        const double mu = mode_wavenumber(mode_number(k, m), grid.half_width);
        hat.coeffs[static_cast<std::size_t>(k)] *= std::polar(1.0, -mu * mu * dt / 2.0);
    }
    return dft_inverse(hat, grid);
}

WaveField nonlinear_phase(const WaveField& f, double g, double dt) {
    WaveField out = f;
    for (Complex& u : out.values) {
        const double w = u.real() * u.real() + u.imag() * u.imag();
        u *= std::polar(1.0, -g * w * dt);
    }
    return out;
}

}  // namespace gpe
