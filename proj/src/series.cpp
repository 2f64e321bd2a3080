#include "funcut/series.hpp"

#include "funcut/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace funcut {

bool Interval::valid() const noexcept { return std::isfinite(a) && std::isfinite(b) && a < b; }

double map_to_reference(double x, Interval interval) noexcept {
    if (interval.is_reference())
        return x;
    if (x == interval.a)
        return -1.0;
    if (x == interval.b)
        return 1.0;
    const double mid = 0.5 * interval.a + 0.5 * interval.b;
    const double half = 0.5 * interval.b - 0.5 * interval.a;
    return (x - mid) / half;
}

double map_from_reference(double t, Interval interval) noexcept {
    if (interval.is_reference())
        return t;
    if (t == -1.0)
        return interval.a;
    if (t == 1.0)
        return interval.b;
    const double mid = 0.5 * interval.a + 0.5 * interval.b;
    const double half = 0.5 * interval.b - 0.5 * interval.a;
    return mid + half * t;
}

CoefficientSeries::CoefficientSeries(Basis basis, Interval interval, std::vector<Complex> coeffs)
    : basis_(basis), interval_(interval), coeffs_(std::move(coeffs)) {
    if (!interval_.valid())
        throw std::invalid_argument("CoefficientSeries: interval must be finite with a < b");
    if (coeffs_.empty())
        throw std::invalid_argument("CoefficientSeries: no coefficients");
    if (basis_ == Basis::Trigonometric && coeffs_.size() % 2 == 0)
        throw std::invalid_argument("CoefficientSeries: trigonometric series must have odd length");
}

Complex CoefficientSeries::operator()(double x) const {
    const double t = map_to_reference(x, interval_);
    if (basis_ == Basis::Chebyshev)
        return clenshaw_eval(coeffs_, t);
    return trig_eval(coeffs_, std::numbers::pi * t);
}

bool CoefficientSeries::operator==(const CoefficientSeries &other) const noexcept {
    return basis_ == other.basis_ && interval_ == other.interval_ && coeffs_.size() == other.coeffs_.size() &&
           std::memcmp(coeffs_.data(), other.coeffs_.data(), coeffs_.size() * sizeof(Complex)) == 0;
}

void ConstructConfig::validate() const {
    if (!(tol > 0.0 && tol < 1.0))
        throw std::invalid_argument("ConstructConfig: tol must lie in (0, 1)");
    if (!(tol_scale > 0.0) || !std::isfinite(tol_scale))
        throw std::invalid_argument("ConstructConfig: tol_scale must be positive");
    if (min_samples < 17)
        throw std::invalid_argument("ConstructConfig: min_samples must be at least 17");
    if (max_samples < min_samples)
        throw std::invalid_argument("ConstructConfig: max_samples must be at least min_samples");
}

double ConstructConfig::effective_tol() const noexcept {
    const double below_one = std::nextafter(1.0, 0.0);
    return std::min(below_one, tol * tol_scale);
}

double max_abs(std::span<const Complex> values) noexcept {
    double m = 0.0;
    for (const Complex &v : values)
        m = std::max(m, std::abs(v));
    return m;
}

std::string to_string(Basis basis) { return basis == Basis::Chebyshev ? "chebyshev" : "trigonometric"; }

} // namespace funcut
