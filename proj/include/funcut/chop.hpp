#pragma once

#include "funcut/series.hpp"

#include <optional>
#include <span>
#include <vector>

namespace funcut {

/// Running suffix maximum of |coeffs|, normalized by its first entry.
/// Returns nullopt (the zero flag) when every coefficient is zero.
std::optional<Envelope> compute_envelope(std::span<const Complex> coeffs);
std::optional<Envelope> compute_envelope(std::span<const double> magnitudes);

/// Three-step plateau detection and chop-point selection.
///
///  1. Envelope: suffix maxima of |coeffs|, normalized to start at 1.
///  2. Plateau search: the first j >= 2 with j2 = round(1.25 j + 5) <= n and
///     envelope_j == 0 or envelope_j2 / envelope_j > 3 (1 - ln(envelope_j) / ln(tol)).
///     plateauPoint = j - 1. Running off the end (j2 > n) is unhappy.
///  3. Chop: the lowest point of log10(envelope) against a line rising by
///     -log10(tol)/3 over 1..j2, after capping j2 at the last entry >= tol^(7/6).
///
/// Indices are 1-based. Short inputs (n < 17) return cutoff = n; tol >= 1
/// returns cutoff = 1 with degenerate_tol set.
ChopResult standard_chop(std::span<const Complex> coeffs, double tol);

/// Same algorithm on a precomputed magnitude sequence (e.g. a folded
/// trigonometric series).
ChopResult standard_chop(std::span<const double> magnitudes, double tol);

/// The first cutoff coefficients when happy, the input unchanged otherwise.
std::vector<Complex> chop_sequence(std::span<const Complex> coeffs, double tol, ChopResult *result = nullptr);

} // namespace funcut
