#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace funcut {

using Complex = std::complex<double>;

enum class Basis { Chebyshev, Trigonometric };

/// Closed, finite interval [a, b] with a < b.
struct Interval {
    double a = -1.0;
    double b = 1.0;

    bool valid() const noexcept;
    bool is_reference() const noexcept { return a == -1.0 && b == 1.0; }
    bool operator==(const Interval &) const = default;
};

/// Affine map [a, b] -> [-1, 1]. Endpoints map exactly.
double map_to_reference(double x, Interval interval) noexcept;

/// Affine map [-1, 1] -> [a, b]. Endpoints map exactly; the identity on [-1, 1].
double map_from_reference(double t, Interval interval) noexcept;

/// Coefficients of a Chebyshev or trigonometric expansion on an interval.
///
/// Chebyshev: entry k holds a_k, the coefficient of T_k (degree k; index k+1
/// in 1-based terms). Trigonometric: 2m+1 entries c_{-m}, ..., c_0, ..., c_m in
/// wavenumber order, so c_k lives at position k + m.
class CoefficientSeries {
public:
    CoefficientSeries(Basis basis, Interval interval, std::vector<Complex> coeffs);

    Basis basis() const noexcept { return basis_; }
    const Interval &interval() const noexcept { return interval_; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Largest wavenumber m of a trigonometric series (size() == 2m+1).
    std::size_t max_wavenumber() const noexcept { return (coeffs_.size() - 1) / 2; }

    /// Evaluate at x in the series' interval.
    Complex operator()(double x) const;

    /// Bitwise comparison of the coefficient payloads.
    bool operator==(const CoefficientSeries &other) const noexcept;

private:
    Basis basis_;
    Interval interval_;
    std::vector<Complex> coeffs_;
};

/// Normalized upper envelope of coefficient magnitudes.
struct Envelope {
    std::vector<double> values;
};

/// Outcome of standard_chop. cutoff and plateau_point are 1-based, exactly
/// as in the reference listing: the retained degrees are 0..cutoff-1.
struct ChopResult {
    std::size_t cutoff = 1;
    std::optional<std::size_t> plateau_point;
    bool happy = false;
    /// Set when tol >= 1 short-circuited the algorithm.
    bool degenerate_tol = false;
    Envelope envelope;
};

struct ConstructConfig {
    double tol = 0x1p-52;
    double tol_scale = 1.0;
    std::size_t min_samples = 17;
    std::size_t max_samples = 65537;
    bool trig = false;
    bool doublelength = false;
    bool resample = false;

    /// Throws std::invalid_argument when an invariant is violated.
    void validate() const;

    /// min(1 - ulp, tol * tol_scale): the tolerance handed to standard_chop.
    double effective_tol() const noexcept;
};

/// A single smooth piece: a chopped series plus the scale it was built at.
struct Fun {
    CoefficientSeries series;
    double vscale = 0.0;
    ChopResult diagnostics;
    bool happy = false;

    std::size_t length() const noexcept { return series.size(); }
    Complex operator()(double x) const { return series(x); }
};

/// Largest magnitude in a list, 0 for an empty list.
double max_abs(std::span<const Complex> values) noexcept;

std::string to_string(Basis basis);

} // namespace funcut
