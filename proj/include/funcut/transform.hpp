#pragma once

#include "funcut/series.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace funcut {

enum class GridKind { ChebyshevSecondKind, EquispacedPeriodic };

struct GridSpec {
    GridKind kind = GridKind::ChebyshevSecondKind;
    std::size_t num_points = 17;
};

/// Which algorithm a values<->coefficients transform runs.
enum class TransformPath {
    Fast,   ///< FFT of the even-symmetric (or periodic) extension, O(n log n)
    Direct, ///< explicit cosine/exponential sums, O(n^2); reference oracle
};

/// The n+1 Chebyshev points of the second kind, cos(j pi / n), in ascending
/// order. Endpoints are exactly -1 and 1 and points[j] == -points[n-j].
std::vector<double> cheb_points(std::size_t n);

/// Coefficients a_0..a_n of the degree-n interpolant through values sampled
/// at cheb_points(n). Real values yield coefficients with zero imaginary parts.
std::vector<Complex> vals_to_coeffs(std::span<const Complex> values, TransformPath path = TransformPath::Fast);

/// Values of sum a_k T_k at cheb_points(n) for n+1 coefficients.
std::vector<Complex> coeffs_to_vals(std::span<const Complex> coeffs, TransformPath path = TransformPath::Fast);

/// Value of sum a_k T_k(x), x in [-1, 1], by the Clenshaw recurrence.
Complex clenshaw_eval(std::span<const Complex> coeffs, double x);

/// Clenshaw evaluation at many points at once (vectorized across points).
std::vector<Complex> clenshaw_eval(std::span<const Complex> coeffs, std::span<const double> xs);

/// N equispaced points on [-pi, pi): -pi included, pi excluded.
std::vector<double> trig_points(std::size_t num_points);

/// Coefficients c_{-N/2}..c_{N/2} (N+1 entries) of the trigonometric
/// interpolant through N values at trig_points(N). The Nyquist mode is split
/// evenly between c_{-N/2} and c_{N/2}, i.e. it is represented by a cosine.
std::vector<Complex> trig_vals_to_coeffs(std::span<const Complex> values, TransformPath path = TransformPath::Fast);

/// Values at trig_points(N) of a balanced list of N+1 coefficients.
std::vector<Complex> trig_coeffs_to_vals(std::span<const Complex> coeffs, TransformPath path = TransformPath::Fast);

/// Value of sum_k c_k exp(i k t) for a balanced coefficient list.
Complex trig_eval(std::span<const Complex> coeffs, double t);

/// Magnitude sequence handed to standard_chop for a trigonometric series:
/// |c_0|, then (|c_k| + |c_-k|)/2 twice for k = 1..m. Throws
/// std::invalid_argument for even-length input.
std::vector<double> fold_trig_for_chop(std::span<const Complex> trig_coeffs);

} // namespace funcut
