#pragma once

#include "funcut/series.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace funcut {

/// A function to be sampled on an interval. The callback must be
/// deterministic: the same x always yields bitwise the same value.
struct Sampler {
    std::function<Complex(double)> f;
    Interval interval;
};

/// A sample came back NaN or infinite.
class SamplingError : public std::runtime_error {
public:
    SamplingError(double x, Complex value);
    double x() const noexcept { return x_; }
    Complex value() const noexcept { return value_; }

private:
    double x_;
    Complex value_;
};

/// Record of one grid in the refinement ladder.
struct GridAttempt {
    std::size_t points = 0;
    ChopResult chop;
    /// Only run when the chop was happy.
    std::optional<bool> sample_test_passed;
};

struct ConstructReport {
    std::vector<std::size_t> grids_tried;
    std::vector<GridAttempt> per_grid;
    std::size_t sample_test_failures = 0;
    std::optional<std::string> warning;
};

struct Construction {
    Fun fun;
    ConstructReport report;
    /// Unchopped representation at twice the selected degree, when requested.
    std::optional<Fun> doubled;
};

/// Adaptive construction: sample on 17, 33, 65, ... Chebyshev points (or
/// 16, 32, ... equispaced points in trig mode), chop, confirm with
/// sample_test, and stop at the first grid that passes both.
Construction construct(const Sampler &sampler, const ConstructConfig &config = {});

/// Sample a single grid of `points` points (Chebyshev: points-1 is the
/// degree; trig: an even count) and return the unchopped interpolant. The
/// chop diagnostics of that grid are attached but not applied.
Fun sample_grid(const Sampler &sampler, Basis basis, std::size_t points, double tol);

/// Off-grid check of a candidate against the sampler at two fixed irrational
/// reference points. Passes when both errors are within sqrt(tol) * vscale:
/// aliasing errors are O(vscale), while the sampler's own evaluation error
/// can exceed tol * vscale by orders of magnitude (cos(128 acos x)).
bool sample_test(const Sampler &sampler, const Fun &candidate, double tol);
bool sample_test(const Sampler &sampler, const CoefficientSeries &candidate, double tol, double vscale);

/// Next grid size in the construction sequence: 2(n-1)+1, or 2n in trig mode.
std::size_t next_grid(std::size_t current, bool trig);

/// Reference-coordinate points used by sample_test.
inline constexpr double kSampleTestPoints[2] = {0.6180339887498949, 0.3183098861837907};

} // namespace funcut
