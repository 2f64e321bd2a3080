#include "funcut/calculus.hpp"

#include "funcut/chop.hpp"
#include "funcut/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace funcut {

namespace {

void require_compatible(const Fun &f, const Fun &g) {
    if (f.series.basis() != g.series.basis())
        throw std::invalid_argument("basis mismatch");
    if (!(f.series.interval() == g.series.interval()))
        throw std::invalid_argument("interval mismatch");
}

// Product without the NaN-recovery path of the library operator.
Complex mul(const Complex &a, const Complex &b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

Fun make_fun(Basis basis, Interval interval, std::vector<Complex> coeffs, bool happy) {
    CoefficientSeries series(basis, interval, std::move(coeffs));
    const double vscale = series_vscale(series);
    ChopResult diag;
    diag.cutoff = series.size();
    diag.happy = happy;
    return Fun{std::move(series), vscale, std::move(diag), happy};
}

// Balanced trig list of wavenumbers -m..m, zero-extended to -target..target.
std::vector<Complex> pad_trig(std::span<const Complex> coeffs, std::size_t target) {
    const std::size_t m = (coeffs.size() - 1) / 2;
    std::vector<Complex> out(2 * target + 1);
    std::copy(coeffs.begin(), coeffs.end(), out.begin() + static_cast<std::ptrdiff_t>(target - m));
    return out;
}

} // namespace

double series_vscale(const CoefficientSeries &series) {
    const auto c = series.coeffs();
    if (series.basis() == Basis::Chebyshev)
        return c.size() == 1 ? std::abs(c[0]) : max_abs(coeffs_to_vals(c));
    return c.size() == 1 ? std::abs(c[0]) : max_abs(trig_coeffs_to_vals(c));
}

Fun negate(const Fun &f) {
    std::vector<Complex> c(f.series.coeffs().begin(), f.series.coeffs().end());
    for (Complex &v : c)
        v = -v;
    return Fun{CoefficientSeries(f.series.basis(), f.series.interval(), std::move(c)), f.vscale, f.diagnostics,
               f.happy};
}

Fun add(const Fun &f, const Fun &g, bool post_simplify, double tol) {
    require_compatible(f, g);
    const auto a = f.series.coeffs();
    const auto b = g.series.coeffs();
    std::vector<Complex> sum;
    if (f.series.basis() == Basis::Chebyshev) {
        sum.assign(std::max(a.size(), b.size()), Complex{});
        for (std::size_t k = 0; k < sum.size(); ++k) {
            if (k < a.size() && k < b.size())
                sum[k] = a[k] + b[k];
            else
                sum[k] = k < a.size() ? a[k] : b[k];
        }
    } else {
        const std::size_t m = std::max(a.size(), b.size()) / 2;
        const std::size_t ma = a.size() / 2, mb = b.size() / 2;
        sum.assign(2 * m + 1, Complex{});
        for (std::size_t p = 0; p < sum.size(); ++p) {
            const long long k = static_cast<long long>(p) - static_cast<long long>(m);
            const bool in_a = std::llabs(k) <= static_cast<long long>(ma);
            const bool in_b = std::llabs(k) <= static_cast<long long>(mb);
            const Complex *va = in_a ? &a[static_cast<std::size_t>(k + static_cast<long long>(ma))] : nullptr;
            const Complex *vb = in_b ? &b[static_cast<std::size_t>(k + static_cast<long long>(mb))] : nullptr;
            if (va && vb)
                sum[p] = *va + *vb;
            else if (va)
                sum[p] = *va;
            else if (vb)
                sum[p] = *vb;
        }
    }
    Fun out = make_fun(f.series.basis(), f.series.interval(), std::move(sum), f.happy && g.happy);
    return post_simplify ? simplify(out, tol) : out;
}

Fun multiply(const Fun &f, const Fun &g, double tol) {
    require_compatible(f, g);
    const auto a = f.series.coeffs();
    const auto b = g.series.coeffs();
    std::vector<Complex> prod;
    if (f.series.basis() == Basis::Chebyshev) {
        prod.assign(a.size() + b.size() - 1, Complex{});
        for (std::size_t m = 0; m < a.size(); ++m) {
            for (std::size_t n = 0; n < b.size(); ++n) {
                const Complex p = 0.5 * mul(a[m], b[n]);
                prod[m + n] += p;
                prod[m > n ? m - n : n - m] += p;
            }
        }
    } else {
        prod.assign(a.size() + b.size() - 1, Complex{});
        // Wavenumbers add; with balanced lists positions simply add too.
        for (std::size_t p = 0; p < a.size(); ++p)
            for (std::size_t q = 0; q < b.size(); ++q)
                prod[p + q] += mul(a[p], b[q]);
    }
    return simplify(make_fun(f.series.basis(), f.series.interval(), std::move(prod), f.happy && g.happy), tol);
}

Fun cumsum(const Fun &f, double tol) {
    if (f.series.basis() != Basis::Chebyshev)
        throw std::invalid_argument("cumsum: only Chebyshev series are supported");
    const auto a = f.series.coeffs();
    const std::size_t n = a.size();
    const Interval iv = f.series.interval();
    const double half_width = 0.5 * iv.b - 0.5 * iv.a;
    auto coeff = [&](std::size_t k) { return k < n ? a[k] : Complex{}; };

    std::vector<Complex> b(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        const Complex prev = (k == 1) ? 2.0 * coeff(0) : coeff(k - 1);
        b[k] = half_width * ((prev - coeff(k + 1)) / (2.0 * static_cast<double>(k)));
    }

    auto pin_left_end = [](std::vector<Complex> &c) {
        // F(a) = sum_k (-1)^k b_k = 0.
        Complex s{};
        for (std::size_t k = 1; k < c.size(); ++k)
            s += (k % 2 == 0) ? c[k] : -c[k];
        c[0] = -s;
    };
    pin_left_end(b);

    Fun integral = simplify(make_fun(Basis::Chebyshev, iv, std::move(b), f.happy), tol);
    std::vector<Complex> c(integral.series.coeffs().begin(), integral.series.coeffs().end());
    pin_left_end(c);
    ChopResult diag = integral.diagnostics;
    Fun out = make_fun(Basis::Chebyshev, iv, std::move(c), f.happy);
    out.diagnostics = std::move(diag);
    return out;
}

Fun simplify(const Fun &f, double tol) {
    const auto c = f.series.coeffs();
    const std::size_t n = c.size();
    const auto target = std::max<std::size_t>(17, static_cast<std::size_t>(std::round(1.25 * static_cast<double>(n))));

    std::vector<Complex> kept;
    ChopResult chop;
    if (f.series.basis() == Basis::Chebyshev) {
        std::vector<Complex> padded(c.begin(), c.end());
        padded.resize(std::max(target, n));
        chop = standard_chop(padded, tol);
        if (!chop.happy)
            return f;
        kept.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(chop.cutoff, n)));
    } else {
        const std::size_t m = (n - 1) / 2;
        const std::size_t padded_m = std::max(m, target / 2);
        const std::vector<Complex> padded = pad_trig(c, padded_m);
        const std::vector<double> folded = fold_trig_for_chop(padded);
        chop = standard_chop(std::span<const double>(folded), tol);
        if (!chop.happy)
            return f;
        const std::size_t keep = std::min(chop.cutoff / 2, m);
        kept.assign(c.begin() + static_cast<std::ptrdiff_t>(m - keep), c.begin() + static_cast<std::ptrdiff_t>(m + keep + 1));
    }
    Fun out = make_fun(f.series.basis(), f.series.interval(), std::move(kept), f.happy);
    out.diagnostics = std::move(chop);
    return out;
}

} // namespace funcut
