#include "dho/fourier.hpp"

#include <fftw3.h>

#include <cmath>

#include "dho/errors.hpp"

namespace dho::fourier {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// One-dimensional spectral derivative of `line` (length M) in place,
// using preallocated FFTW buffers/plans.
struct Plan1d {
    int m;
    fftw_complex* buf;
    fftw_plan fwd, bwd;

    explicit Plan1d(int size) : m(size) {
        buf = fftw_alloc_complex(std::size_t(m));
        if (!buf) throw Error("fourier", "FFT buffer allocation failed");
        fwd = fftw_plan_dft_1d(m, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(m, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Plan1d() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(buf);
    }
    Plan1d(const Plan1d&) = delete;
    Plan1d& operator=(const Plan1d&) = delete;

    void derive(complexd* line, std::size_t stride, double period) {
        for (int j = 0; j < m; ++j) {
            buf[j][0] = line[std::size_t(j) * stride].real();
            buf[j][1] = line[std::size_t(j) * stride].imag();
        }
        fftw_execute(fwd);
        for (int j = 0; j < m; ++j) {
            // fftfreq index; the Nyquist mode has no usable derivative.
            int fj = j <= m / 2 ? j : j - m;
            if (2 * j == m) fj = 0;
            const double k = kTwoPi * double(fj) / period;
            const double re = buf[j][0], im = buf[j][1];
            buf[j][0] = -k * im; // multiply by i k
            buf[j][1] = k * re;
        }
        fftw_execute(bwd);
        const double inv = 1.0 / double(m);
        for (int j = 0; j < m; ++j)
            line[std::size_t(j) * stride] =
                complexd(buf[j][0] * inv, buf[j][1] * inv);
    }
};

} // namespace

std::vector<complexd> derivative_periodic(const std::vector<complexd>& samples,
                                          double period) {
    if (samples.size() < 2) throw Error("fourier", "need at least 2 samples");
    if (!(period > 0.0)) throw Error("fourier", "period must be > 0");
    std::vector<complexd> out = samples;
    Plan1d plan(int(samples.size()));
    plan.derive(out.data(), 1, period);
    return out;
}

std::vector<complexd> partial_derivative_2d(const std::vector<complexd>& grid,
                                            int nx, int ny, double length_x,
                                            double length_y, int axis) {
    if (nx < 2 || ny < 2 || grid.size() != std::size_t(nx) * ny)
        throw Error("fourier", "grid dimensions mismatch");
    std::vector<complexd> out = grid;
    if (axis == 0) {
        Plan1d plan(nx);
        for (int iy = 0; iy < ny; ++iy)
            plan.derive(out.data() + std::size_t(iy) * nx, 1, length_x);
    } else if (axis == 1) {
        Plan1d plan(ny);
        for (int ix = 0; ix < nx; ++ix)
            plan.derive(out.data() + ix, std::size_t(nx), length_y);
    } else {
        throw Error("fourier", "axis must be 0 or 1");
    }
    return out;
}

} // namespace dho::fourier
