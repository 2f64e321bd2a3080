#pragma once

#include "funcut/construct.hpp"
#include "funcut/expr.hpp"
#include "funcut/series.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using funcut::Complex;

// Deterministic noise in [-1, 1] keyed on the bit pattern of x, so nested
// grids and repeated evaluations see identical values.
inline double pseudonoise(double x) {
    std::uint64_t z = std::bit_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1p-52 - 1.0;
}

inline funcut::Sampler expr_sampler(const std::string &src, funcut::Interval interval = {}) {
    auto ast = std::make_shared<funcut::expr::Ast>(funcut::expr::parse(src));
    return {[ast](double x) { return funcut::expr::eval_ast(*ast, x); }, interval};
}

inline funcut::Construction construct_expr(const std::string &src, funcut::ConstructConfig config = {}) {
    return funcut::construct(expr_sampler(src), config);
}

// Max |fun(x) - exact(x)| over n equispaced points of the fun's interval.
template <class F> double max_error(const funcut::Fun &fun, F exact, std::size_t n = 1000) {
    const funcut::Interval iv = fun.series.interval();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = iv.a + (iv.b - iv.a) * static_cast<double>(i) / static_cast<double>(n - 1);
        worst = std::max(worst, std::abs(fun(x) - Complex(exact(x))));
    }
    return worst;
}

struct SyntheticCase {
    std::vector<Complex> coeffs;
    double tol;
};

// Geometric decays 10^(-k/s), s in [2, 100], sitting on noise floors 10^-p,
// p in {8, 10, 13, 16}, with lengths 17..4097. A share of cases gets an exact
// zero tail, oscillating magnitudes, or a non-default tolerance.
inline std::vector<SyntheticCase> synthetic_corpus(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    const int floors[] = {8, 10, 13, 16};
    const double tols[] = {0x1p-52, 0x1p-52, 0x1p-52, 1e-8, 1e-10, 1e-13, 1e-6, 1e-15};
    std::vector<SyntheticCase> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        const auto n = static_cast<std::size_t>(std::round(17.0 * std::pow(4097.0 / 17.0, unit(rng))));
        const double s = 2.0 + 98.0 * unit(rng);
        const double noise = std::pow(10.0, -floors[rng() % 4]);
        const double tol = tols[rng() % 8];
        const bool zero_tail = rng() % 8 == 0;
        const bool oscillate = rng() % 2 == 0;
        const double scale = std::ldexp(1.0, static_cast<int>(rng() % 41) - 20);
        std::vector<Complex> coeffs(n);
        for (std::size_t k = 0; k < n; ++k) {
            double mag = std::pow(10.0, -static_cast<double>(k) / s);
            if (oscillate)
                mag *= 0.25 + 0.75 * unit(rng);
            mag += noise * sym(rng);
            coeffs[k] = scale * std::polar(std::abs(mag), 2.0 * 3.141592653589793 * unit(rng));
        }
        if (zero_tail) {
            const std::size_t from = n / 2 + rng() % (n / 2);
            std::fill(coeffs.begin() + static_cast<std::ptrdiff_t>(from), coeffs.end(), Complex{});
        }
        out.push_back({std::move(coeffs), tol});
    }
    return out;
}

} // namespace testsupport
