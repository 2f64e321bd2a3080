#include "funcut/chop.hpp"

#include <algorithm>
#include <cmath>

namespace funcut {

namespace {

constexpr std::size_t kMinChopLength = 17;

std::vector<double> magnitudes_of(std::span<const Complex> coeffs) {
    std::vector<double> b(coeffs.size());
    std::transform(coeffs.begin(), coeffs.end(), b.begin(), [](const Complex &c) { return std::abs(c); });
    return b;
}

// Suffix maxima, unnormalized.
std::vector<double> suffix_max(std::span<const double> b) {
    std::vector<double> m(b.begin(), b.end());
    for (std::size_t j = m.size() - 1; j-- > 0;)
        m[j] = std::max(b[j], m[j + 1]);
    return m;
}

} // namespace

std::optional<Envelope> compute_envelope(std::span<const double> magnitudes) {
    if (magnitudes.empty())
        return std::nullopt;
    std::vector<double> m = suffix_max(magnitudes);
    if (m.front() == 0.0)
        return std::nullopt;
    const double top = m.front();
    for (double &v : m)
        v /= top;
    return Envelope{std::move(m)};
}

std::optional<Envelope> compute_envelope(std::span<const Complex> coeffs) {
    const std::vector<double> b = magnitudes_of(coeffs);
    return compute_envelope(std::span<const double>(b));
}

ChopResult standard_chop(std::span<const Complex> coeffs, double tol) {
    const std::vector<double> b = magnitudes_of(coeffs);
    return standard_chop(std::span<const double>(b), tol);
}

ChopResult standard_chop(std::span<const double> magnitudes, double tol) {
    const std::size_t n = magnitudes.size();
    ChopResult result;
    auto finish = [&](std::size_t cutoff) {
        result.cutoff = cutoff;
        result.happy = cutoff < n;
        return result;
    };

    if (auto env = compute_envelope(magnitudes))
        result.envelope = *std::move(env);
    else
        result.envelope.values.assign(n, 0.0);

    if (tol >= 1.0) {
        result.degenerate_tol = true;
        return finish(1);
    }
    if (n < kMinChopLength)
        return finish(n);
    if (result.envelope.values.front() == 0.0)
        return finish(1);

    // From here on indices are 1-based, as in the reference listing.
    std::vector<double> envelope = result.envelope.values;
    auto env = [&](std::size_t j) -> double & { return envelope[j - 1]; };

    std::size_t plateau_point = 0;
    std::size_t j2 = 0;
    for (std::size_t j = 2; j <= n; ++j) {
        j2 = static_cast<std::size_t>(std::round(1.25 * static_cast<double>(j) + 5.0));
        if (j2 > n)
            return finish(n);
        const double e1 = env(j);
        const double e2 = env(j2);
        const double r = 3.0 * (1.0 - std::log(e1) / std::log(tol));
        if (e1 == 0.0 || e2 / e1 > r) {
            plateau_point = j - 1;
            break;
        }
    }
    // j2 > n for j = n, so the scan always breaks or returns.
    result.plateau_point = plateau_point;

    if (env(plateau_point) == 0.0)
        return finish(plateau_point);

    const double floor_level = std::pow(tol, 7.0 / 6.0);
    const auto j3 = static_cast<std::size_t>(
        std::count_if(envelope.begin(), envelope.end(), [&](double v) { return v >= floor_level; }));
    if (j3 < j2) {
        j2 = j3 + 1;
        env(j2) = floor_level;
    }

    // log10(envelope) plus linspace(0, -log10(tol)/3, j2); first minimum wins.
    const double rise = (-1.0 / 3.0) * std::log10(tol);
    const double steps = static_cast<double>(j2 - 1);
    std::size_t d = 1;
    double best = 0.0;
    for (std::size_t i = 1; i <= j2; ++i) {
        const double line = (i == j2) ? rise : (static_cast<double>(i - 1) * rise) / steps;
        const double cc = std::log10(env(i)) + line;
        if (i == 1 || cc < best) {
            best = cc;
            d = i;
        }
    }
    return finish(std::max<std::size_t>(d, 2) - 1);
}

std::vector<Complex> chop_sequence(std::span<const Complex> coeffs, double tol, ChopResult *result) {
    ChopResult chop = standard_chop(coeffs, tol);
    std::vector<Complex> out = chop.happy ? std::vector<Complex>(coeffs.begin(), coeffs.begin() + chop.cutoff)
                                          : std::vector<Complex>(coeffs.begin(), coeffs.end());
    if (result)
        *result = std::move(chop);
    return out;
}

} // namespace funcut
