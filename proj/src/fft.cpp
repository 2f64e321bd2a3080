#include "funcut/fft.hpp"

#include "funcut/kernels.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace funcut::fft {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && std::has_single_bit(n); }

std::complex<double> unit_root(std::size_t num, std::size_t den) {
    if (den == 0)
        throw std::invalid_argument("unit_root: zero denominator");
    num %= den;
    // Nearest quarter turn q, remainder angle in [-pi/4, pi/4].
    const auto n4 = static_cast<long long>(4 * num);
    const auto d = static_cast<long long>(den);
    const long long q = (2 * n4 + d) / (2 * d);
    const long long rem = n4 - q * d;
    const long double angle = std::numbers::pi_v<long double> * static_cast<long double>(rem) /
                              (2.0L * static_cast<long double>(d));
    double c = static_cast<double>(std::cos(angle));
    double s = static_cast<double>(std::sin(angle));
    if (rem == 0) {
        c = 1.0;
        s = 0.0;
    }
    // exp(+i theta) rotated by q quarter turns, then conjugated.
    double re = c, im = s;
    switch (q & 3) {
    case 0:
        break;
    case 1:
        re = -s;
        im = c;
        break;
    case 2:
        re = -c;
        im = -s;
        break;
    case 3:
        re = s;
        im = -c;
        break;
    }
    return {re, -im + 0.0};
}

namespace {

void bit_reverse(std::span<std::complex<double>> data) {
    const std::size_t n = data.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(data[i], data[j]);
    }
}

void radix2(std::span<std::complex<double>> data) {
    const std::size_t n = data.size();
    if (n < 2)
        return;
    bit_reverse(data);
    std::vector<std::complex<double>> twiddles(n / 2);
    for (std::size_t half = 1; half < n; half *= 2) {
        for (std::size_t j = 0; j < half; ++j)
            twiddles[j] = unit_root(j, 2 * half);
        kernels::butterfly_pass(data, std::span<const std::complex<double>>(twiddles.data(), half), half);
    }
}

void bluestein(std::span<std::complex<double>> data) {
    const std::size_t n = data.size();
    const std::size_t m = std::bit_ceil(2 * n - 1);
    // chirp_j = exp(i pi j^2 / n)
    std::vector<std::complex<double>> chirp(n);
    for (std::size_t j = 0; j < n; ++j)
        chirp[j] = std::conj(unit_root((j * j) % (2 * n), 2 * n));

    std::vector<std::complex<double>> a(m), b(m);
    for (std::size_t j = 0; j < n; ++j)
        a[j] = data[j] * std::conj(chirp[j]);
    b[0] = chirp[0];
    for (std::size_t j = 1; j < n; ++j)
        b[j] = b[m - j] = chirp[j];

    radix2(a);
    radix2(b);
    for (std::size_t k = 0; k < m; ++k)
        a[k] *= b[k];
    inverse(a);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k)
        data[k] = a[k] * scale * std::conj(chirp[k]);
}

} // namespace

void forward(std::span<std::complex<double>> data) {
    if (data.size() < 2)
        return;
    if (is_power_of_two(data.size()))
        radix2(data);
    else
        bluestein(data);
}

void inverse(std::span<std::complex<double>> data) {
    for (auto &v : data)
        v = std::conj(v);
    forward(data);
    for (auto &v : data)
        v = std::conj(v);
}

std::vector<std::complex<double>> forward_direct(std::span<const std::complex<double>> data) {
    const std::size_t n = data.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            sum += data[j] * unit_root((j * k) % n, n);
        out[k] = sum;
    }
    return out;
}

} // namespace funcut::fft
