#include "funcut/transform.hpp"

#include "funcut/fft.hpp"
#include "funcut/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace funcut {

namespace {

bool has_imag(std::span<const Complex> values) {
    return std::any_of(values.begin(), values.end(), [](const Complex &v) { return v.imag() != 0.0; });
}

// Apply a real-to-real linear transform to the real and imaginary parts
// separately, so real data stays exactly real.
template <class RealTransform>
std::vector<Complex> split_parts(std::span<const Complex> in, RealTransform &&transform) {
    std::vector<double> part(in.size());
    std::transform(in.begin(), in.end(), part.begin(), [](const Complex &v) { return v.real(); });
    const std::vector<double> re = transform(part);
    std::vector<Complex> out(re.size());
    if (has_imag(in)) {
        std::transform(in.begin(), in.end(), part.begin(), [](const Complex &v) { return v.imag(); });
        const std::vector<double> im = transform(part);
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = {re[k], im[k]};
    } else {
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = {re[k], 0.0};
    }
    return out;
}

// cos(pi * num / den) from exactly reduced roots of unity.
double cos_pi_ratio(std::size_t num, std::size_t den) { return fft::unit_root(num, 2 * den).real(); }

// Values w_0..w_n at cos(j pi / n) (descending points) -> a_0..a_n.
std::vector<double> dct1_values_to_coeffs(const std::vector<double> &w, TransformPath path) {
    const std::size_t n = w.size() - 1;
    std::vector<double> a(n + 1);
    if (path == TransformPath::Fast) {
        std::vector<Complex> ext(2 * n);
        for (std::size_t j = 0; j <= n; ++j)
            ext[j] = w[j];
        for (std::size_t j = 1; j < n; ++j)
            ext[2 * n - j] = w[j];
        fft::forward(ext);
        for (std::size_t k = 0; k <= n; ++k)
            a[k] = ext[k].real();
    } else {
        for (std::size_t k = 0; k <= n; ++k) {
            double sum = 0.5 * (w[0] + w[n] * cos_pi_ratio(n * k, n));
            for (std::size_t j = 1; j < n; ++j)
                sum += w[j] * cos_pi_ratio((j * k) % (2 * n), n);
            a[k] = 2.0 * sum;
        }
    }
    const double nd = static_cast<double>(n);
    a[0] /= 2.0 * nd;
    a[n] /= 2.0 * nd;
    for (std::size_t k = 1; k < n; ++k)
        a[k] /= nd;
    return a;
}

// a_0..a_n -> values at cos(j pi / n) (descending points).
std::vector<double> dct1_coeffs_to_values(const std::vector<double> &a, TransformPath path) {
    const std::size_t n = a.size() - 1;
    std::vector<double> w(n + 1);
    if (path == TransformPath::Fast) {
        std::vector<Complex> ext(2 * n);
        ext[0] = a[0];
        ext[n] = a[n];
        for (std::size_t k = 1; k < n; ++k)
            ext[k] = ext[2 * n - k] = 0.5 * a[k];
        fft::forward(ext);
        for (std::size_t j = 0; j <= n; ++j)
            w[j] = ext[j].real();
    } else {
        for (std::size_t j = 0; j <= n; ++j) {
            double sum = a[0];
            for (std::size_t k = 1; k <= n; ++k)
                sum += a[k] * cos_pi_ratio((j * k) % (2 * n), n);
            w[j] = sum;
        }
    }
    return w;
}

std::vector<Complex> dft(std::vector<Complex> data, TransformPath path) {
    if (path == TransformPath::Direct)
        return fft::forward_direct(data);
    fft::forward(data);
    return data;
}

} // namespace

std::vector<double> cheb_points(std::size_t n) {
    if (n < 1)
        throw std::invalid_argument("cheb_points: n must be at least 1");
    std::vector<double> x(n + 1);
    // sin(pi (2j - n) / (2n)) == -cos(j pi / n), but with full relative
    // accuracy near the centre; the negative half is mirrored. Extended
    // precision keeps the single final rounding within an ulp.
    const long double denom = 2.0L * static_cast<long double>(n);
    for (std::size_t j = (n + 1) / 2; j <= n; ++j) {
        const std::size_t m = 2 * j - n;
        x[j] = (m == n) ? 1.0
                        : static_cast<double>(std::sin(std::numbers::pi_v<long double> * static_cast<long double>(m) / denom));
        x[n - j] = -x[j];
    }
    if (n % 2 == 0)
        x[n / 2] = 0.0;
    return x;
}

std::vector<Complex> vals_to_coeffs(std::span<const Complex> values, TransformPath path) {
    if (values.empty())
        throw std::invalid_argument("vals_to_coeffs: no values");
    if (values.size() == 1)
        return {values[0]};
    return split_parts(values, [path](const std::vector<double> &v) {
        // Ascending samples -> descending-point order expected by DCT-I.
        std::vector<double> w(v.rbegin(), v.rend());
        return dct1_values_to_coeffs(w, path);
    });
}

std::vector<Complex> coeffs_to_vals(std::span<const Complex> coeffs, TransformPath path) {
    if (coeffs.empty())
        throw std::invalid_argument("coeffs_to_vals: no coefficients");
    if (coeffs.size() == 1)
        return {coeffs[0]};
    return split_parts(coeffs, [path](const std::vector<double> &a) {
        std::vector<double> w = dct1_coeffs_to_values(a, path);
        std::reverse(w.begin(), w.end());
        return w;
    });
}

Complex clenshaw_eval(std::span<const Complex> coeffs, double x) {
    const double xs[1] = {x};
    return clenshaw_eval(coeffs, std::span<const double>(xs, 1)).front();
}

std::vector<Complex> clenshaw_eval(std::span<const Complex> coeffs, std::span<const double> xs) {
    if (coeffs.empty())
        throw std::invalid_argument("clenshaw_eval: no coefficients");
    std::vector<double> re(coeffs.size()), im(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        re[k] = coeffs[k].real();
        im[k] = coeffs[k].imag();
    }
    std::vector<Complex> out(xs.size());
    kernels::clenshaw(re, im, xs, out);
    return out;
}

std::vector<double> trig_points(std::size_t num_points) {
    if (num_points < 2 || num_points % 2 != 0)
        throw std::invalid_argument("trig_points: need an even number of points >= 2");
    std::vector<double> t(num_points);
    const double nd = static_cast<double>(num_points);
    for (std::size_t j = 0; j < num_points; ++j) {
        const double m = 2.0 * static_cast<double>(j) - nd;
        t[j] = std::numbers::pi * m / nd;
    }
    return t;
}

std::vector<Complex> trig_vals_to_coeffs(std::span<const Complex> values, TransformPath path) {
    const std::size_t n = values.size();
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("trig_vals_to_coeffs: need an even number of values >= 2");
    const std::size_t m = n / 2;
    const std::vector<Complex> spectrum = dft(std::vector<Complex>(values.begin(), values.end()), path);
    const double nd = static_cast<double>(n);
    std::vector<Complex> c(n + 1);
    // c_k = (-1)^k X_{k mod N} / N; the point t_0 = -pi contributes the sign.
    for (std::size_t p = 1; p < n; ++p) {
        const long long k = static_cast<long long>(p) - static_cast<long long>(m);
        const std::size_t idx = k >= 0 ? static_cast<std::size_t>(k) : static_cast<std::size_t>(k + static_cast<long long>(n));
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        c[p] = sign * spectrum[idx] / nd;
    }
    const double nyquist_sign = (m % 2 == 0) ? 1.0 : -1.0;
    c[0] = c[n] = nyquist_sign * spectrum[m] / (2.0 * nd);
    return c;
}

std::vector<Complex> trig_coeffs_to_vals(std::span<const Complex> coeffs, TransformPath path) {
    const std::size_t len = coeffs.size();
    if (len < 3 || len % 2 == 0)
        throw std::invalid_argument("trig_coeffs_to_vals: need an odd number of coefficients >= 3");
    const std::size_t m = (len - 1) / 2;
    const std::size_t n = 2 * m;
    std::vector<Complex> folded(n);
    for (std::size_t p = 1; p < len - 1; ++p) {
        const long long k = static_cast<long long>(p) - static_cast<long long>(m);
        const std::size_t idx = k >= 0 ? static_cast<std::size_t>(k) : static_cast<std::size_t>(k + static_cast<long long>(n));
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        folded[idx] = sign * coeffs[p];
    }
    const double nyquist_sign = (m % 2 == 0) ? 1.0 : -1.0;
    folded[m] = nyquist_sign * (coeffs[0] + coeffs[len - 1]);
    // Inverse DFT through the forward transform of the conjugate.
    for (auto &v : folded)
        v = std::conj(v);
    std::vector<Complex> vals = dft(std::move(folded), path);
    for (auto &v : vals)
        v = std::conj(v);
    return vals;
}

Complex trig_eval(std::span<const Complex> coeffs, double t) {
    if (coeffs.empty() || coeffs.size() % 2 == 0)
        throw std::invalid_argument("trig_eval: need an odd number of coefficients");
    const long long m = static_cast<long long>(coeffs.size() - 1) / 2;
    Complex sum = coeffs[static_cast<std::size_t>(m)];
    for (long long k = 1; k <= m; ++k) {
        const double angle = static_cast<double>(k) * t;
        const Complex up(std::cos(angle), std::sin(angle));
        sum += coeffs[static_cast<std::size_t>(m + k)] * up + coeffs[static_cast<std::size_t>(m - k)] * std::conj(up);
    }
    return sum;
}

std::vector<double> fold_trig_for_chop(std::span<const Complex> trig_coeffs) {
    if (trig_coeffs.empty() || trig_coeffs.size() % 2 == 0)
        throw std::invalid_argument("fold_trig_for_chop: trigonometric series must have odd length");
    const std::size_t m = (trig_coeffs.size() - 1) / 2;
    std::vector<double> out(trig_coeffs.size());
    out[0] = std::abs(trig_coeffs[m]);
    for (std::size_t k = 1; k <= m; ++k) {
        const double avg = (std::abs(trig_coeffs[m + k]) + std::abs(trig_coeffs[m - k])) / 2.0;
        out[2 * k - 1] = avg;
        out[2 * k] = avg;
    }
    return out;
}

} // namespace funcut
