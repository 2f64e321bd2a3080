#include "funcut/kernels.hpp"

namespace funcut::kernels::scalar {

void butterfly_pass(std::complex<double> *data, std::size_t n, const std::complex<double> *twiddles,
                    std::size_t half) noexcept {
    const std::size_t span = 2 * half;
    for (std::size_t base = 0; base < n; base += span) {
        std::complex<double> *lo = data + base;
        std::complex<double> *hi = lo + half;
        for (std::size_t j = 0; j < half; ++j) {
            const double wr = twiddles[j].real();
            const double wi = twiddles[j].imag();
            const double xr = hi[j].real();
            const double xi = hi[j].imag();
            const double tr = wr * xr - wi * xi;
            const double ti = wr * xi + wi * xr;
            const double ur = lo[j].real();
            const double ui = lo[j].imag();
            lo[j] = {ur + tr, ui + ti};
            hi[j] = {ur - tr, ui - ti};
        }
    }
}

void clenshaw(const double *re, const double *im, std::size_t ncoeffs, const double *xs, std::size_t nx,
              std::complex<double> *out) noexcept {
    for (std::size_t p = 0; p < nx; ++p) {
        const double x = xs[p];
        const double x2 = x + x;
        double b1r = 0.0, b1i = 0.0, b2r = 0.0, b2i = 0.0;
        for (std::size_t k = ncoeffs - 1; k >= 1; --k) {
            const double tr = (re[k] + x2 * b1r) - b2r;
            const double ti = (im[k] + x2 * b1i) - b2i;
            b2r = b1r;
            b2i = b1i;
            b1r = tr;
            b1i = ti;
        }
        out[p] = {(re[0] + x * b1r) - b2r, (im[0] + x * b1i) - b2i};
    }
}

} // namespace funcut::kernels::scalar
