#include "funcut/construct.hpp"

#include "funcut/chop.hpp"
#include "funcut/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace funcut {

SamplingError::SamplingError(double x, Complex value)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg.precision(17);
          msg << "non-finite sample " << value << " at x = " << x;
          return msg.str();
      }()),
      x_(x), value_(value) {}

namespace {

constexpr std::size_t kFirstChebGrid = 17;
constexpr std::size_t kFirstTrigGrid = 16;

Complex sample_at(const Sampler &sampler, double x) {
    const Complex v = sampler.f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw SamplingError(x, v);
    return v;
}

// Reference coordinates of an m-point grid in either basis.
std::vector<double> reference_grid(Basis basis, std::size_t points) {
    if (basis == Basis::Chebyshev)
        return cheb_points(points - 1);
    std::vector<double> s(points);
    const double nd = static_cast<double>(points);
    for (std::size_t j = 0; j < points; ++j)
        s[j] = (2.0 * static_cast<double>(j) - nd) / nd;
    return s;
}

std::vector<Complex> sample_points(const Sampler &sampler, std::span<const double> reference,
                                   const std::vector<Complex> *coarse) {
    std::vector<Complex> values(reference.size());
    for (std::size_t j = 0; j < reference.size(); ++j) {
        // Nested grids: every even-indexed fine point is a coarse point.
        if (coarse && j % 2 == 0)
            values[j] = (*coarse)[j / 2];
        else
            values[j] = sample_at(sampler, map_from_reference(reference[j], sampler.interval));
    }
    return values;
}

std::vector<Complex> to_coeffs(Basis basis, std::span<const Complex> values) {
    return basis == Basis::Chebyshev ? vals_to_coeffs(values) : trig_vals_to_coeffs(values);
}

ChopResult chop_for(Basis basis, std::span<const Complex> coeffs, double tol) {
    if (basis == Basis::Chebyshev)
        return standard_chop(coeffs, tol);
    const std::vector<double> folded = fold_trig_for_chop(coeffs);
    return standard_chop(std::span<const double>(folded), tol);
}

// Keep what the chop retained. A folded cutoff of L covers wavenumbers up to
// floor(L/2).
std::vector<Complex> apply_cutoff(Basis basis, std::span<const Complex> coeffs, std::size_t cutoff) {
    if (basis == Basis::Chebyshev)
        return {coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(cutoff)};
    const std::size_t m = (coeffs.size() - 1) / 2;
    const std::size_t keep = cutoff / 2;
    return {coeffs.begin() + static_cast<std::ptrdiff_t>(m - keep),
            coeffs.begin() + static_cast<std::ptrdiff_t>(m + keep + 1)};
}

} // namespace

std::size_t next_grid(std::size_t current, bool trig) { return trig ? 2 * current : 2 * (current - 1) + 1; }

bool sample_test(const Sampler &sampler, const CoefficientSeries &candidate, double tol, double vscale) {
    double scale = std::max(vscale, std::numeric_limits<double>::min());
    double worst = 0.0;
    for (double t : kSampleTestPoints) {
        const double x = map_from_reference(t, sampler.interval);
        const Complex exact = sample_at(sampler, x);
        scale = std::max(scale, std::abs(exact));
        worst = std::max(worst, std::abs(exact - candidate(x)));
    }
    return worst <= std::sqrt(tol) * scale;
}

bool sample_test(const Sampler &sampler, const Fun &candidate, double tol) {
    return sample_test(sampler, candidate.series, tol, candidate.vscale);
}

Fun sample_grid(const Sampler &sampler, Basis basis, std::size_t points, double tol) {
    if (!sampler.interval.valid())
        throw std::invalid_argument("sample_grid: invalid interval");
    if (basis == Basis::Chebyshev ? points < 2 : (points < 2 || points % 2 != 0))
        throw std::invalid_argument("sample_grid: unsupported grid size");
    const std::vector<double> reference = reference_grid(basis, points);
    const std::vector<Complex> values = sample_points(sampler, reference, nullptr);
    std::vector<Complex> coeffs = to_coeffs(basis, values);
    ChopResult chop = chop_for(basis, coeffs, tol);
    return Fun{CoefficientSeries(basis, sampler.interval, std::move(coeffs)), max_abs(values), std::move(chop),
               false};
}

Construction construct(const Sampler &sampler, const ConstructConfig &config) {
    config.validate();
    if (!sampler.interval.valid())
        throw std::invalid_argument("construct: invalid interval");
    const double tol = config.effective_tol();
    const Basis basis = config.trig ? Basis::Trigonometric : Basis::Chebyshev;
    // Trig grids carry one point fewer than the matching Chebyshev grid.
    const std::size_t limit = config.trig ? config.max_samples - 1 : config.max_samples;

    std::size_t points = config.trig ? kFirstTrigGrid : kFirstChebGrid;
    while ((config.trig ? points + 1 : points) < config.min_samples)
        points = next_grid(points, config.trig);

    ConstructReport report;
    std::vector<Complex> values;
    std::optional<Fun> result;
    for (;;) {
        const std::vector<double> reference = reference_grid(basis, points);
        const bool reuse = !config.resample && !values.empty() && next_grid(values.size(), config.trig) == points;
        values = sample_points(sampler, reference, reuse ? &values : nullptr);
        std::vector<Complex> coeffs = to_coeffs(basis, values);
        const double vscale = max_abs(values);

        GridAttempt attempt{points, chop_for(basis, coeffs, tol), std::nullopt};
        if (attempt.chop.happy) {
            CoefficientSeries candidate(basis, sampler.interval, apply_cutoff(basis, coeffs, attempt.chop.cutoff));
            const bool passed = sample_test(sampler, candidate, tol, vscale);
            attempt.sample_test_passed = passed;
            if (passed)
                result = Fun{std::move(candidate), vscale, attempt.chop, true};
            else
                ++report.sample_test_failures;
        }
        report.grids_tried.push_back(points);
        report.per_grid.push_back(attempt);
        if (result)
            break;

        const std::size_t next = next_grid(points, config.trig);
        if (next > limit) {
            std::ostringstream msg;
            msg << "function not resolved using " << points << " pts";
            report.warning = msg.str();
            result = Fun{CoefficientSeries(basis, sampler.interval, std::move(coeffs)), vscale, attempt.chop, false};
            break;
        }
        points = next;
    }

    Construction out{*std::move(result), std::move(report), std::nullopt};
    if (config.doublelength) {
        const std::size_t len = out.fun.length();
        const std::size_t doubled_points =
            basis == Basis::Chebyshev ? 2 * (len - 1) + 2 : std::max<std::size_t>(2, 4 * ((len - 1) / 2));
        out.doubled = sample_grid(sampler, basis, doubled_points, tol);
    }
    return out;
}

} // namespace funcut
