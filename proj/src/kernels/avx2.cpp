// Compiled with -mavx2 and without -mfma: products and sums round separately,
// matching the scalar kernels bit for bit.

#include "funcut/kernels.hpp"

#include <immintrin.h>

namespace funcut::kernels::avx2 {

void butterfly_pass(std::complex<double> *data, std::size_t n, const std::complex<double> *twiddles,
                    std::size_t half) noexcept {
    if (half < 2) {
        scalar::butterfly_pass(data, n, twiddles, half);
        return;
    }
    const std::size_t span = 2 * half;
    auto *raw = reinterpret_cast<double *>(data);
    const auto *tw = reinterpret_cast<const double *>(twiddles);
    for (std::size_t base = 0; base < n; base += span) {
        double *lo = raw + 2 * base;
        double *hi = lo + 2 * half;
        // half is a power of two >= 2, so the inner loop has no remainder.
        for (std::size_t j = 0; j < half; j += 2) {
            const __m256d w = _mm256_loadu_pd(tw + 2 * j);
            const __m256d x = _mm256_loadu_pd(hi + 2 * j);
            const __m256d wr = _mm256_movedup_pd(w);        // wr wr
            const __m256d wi = _mm256_permute_pd(w, 0xF);   // wi wi
            const __m256d xs = _mm256_permute_pd(x, 0x5);   // xi xr
            const __m256d a = _mm256_mul_pd(wr, x);         // wr*xr wr*xi
            const __m256d b = _mm256_mul_pd(wi, xs);        // wi*xi wi*xr
            const __m256d t = _mm256_addsub_pd(a, b);       // wr*xr-wi*xi  wr*xi+wi*xr
            const __m256d u = _mm256_loadu_pd(lo + 2 * j);
            _mm256_storeu_pd(lo + 2 * j, _mm256_add_pd(u, t));
            _mm256_storeu_pd(hi + 2 * j, _mm256_sub_pd(u, t));
        }
    }
}

void clenshaw(const double *re, const double *im, std::size_t ncoeffs, const double *xs, std::size_t nx,
              std::complex<double> *out) noexcept {
    std::size_t p = 0;
    for (; p + 4 <= nx; p += 4) {
        const __m256d x = _mm256_loadu_pd(xs + p);
        const __m256d x2 = _mm256_add_pd(x, x);
        __m256d b1r = _mm256_setzero_pd(), b1i = _mm256_setzero_pd();
        __m256d b2r = _mm256_setzero_pd(), b2i = _mm256_setzero_pd();
        for (std::size_t k = ncoeffs - 1; k >= 1; --k) {
            const __m256d tr = _mm256_sub_pd(_mm256_add_pd(_mm256_set1_pd(re[k]), _mm256_mul_pd(x2, b1r)), b2r);
            const __m256d ti = _mm256_sub_pd(_mm256_add_pd(_mm256_set1_pd(im[k]), _mm256_mul_pd(x2, b1i)), b2i);
            b2r = b1r;
            b2i = b1i;
            b1r = tr;
            b1i = ti;
        }
        const __m256d vr = _mm256_sub_pd(_mm256_add_pd(_mm256_set1_pd(re[0]), _mm256_mul_pd(x, b1r)), b2r);
        const __m256d vi = _mm256_sub_pd(_mm256_add_pd(_mm256_set1_pd(im[0]), _mm256_mul_pd(x, b1i)), b2i);
        // Interleave into (re, im) pairs.
        const __m256d lo = _mm256_unpacklo_pd(vr, vi); // r0 i0 r2 i2
        const __m256d hi = _mm256_unpackhi_pd(vr, vi); // r1 i1 r3 i3
        auto *dst = reinterpret_cast<double *>(out + p);
        _mm256_storeu_pd(dst, _mm256_permute2f128_pd(lo, hi, 0x20));
        _mm256_storeu_pd(dst + 4, _mm256_permute2f128_pd(lo, hi, 0x31));
    }
    if (p < nx)
        scalar::clenshaw(re, im, ncoeffs, xs + p, nx - p, out + p);
}

} // namespace funcut::kernels::avx2
