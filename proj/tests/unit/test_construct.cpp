#include "funcut/construct.hpp"
#include "funcut/transform.hpp"

#include "support/test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace funcut;
using testsupport::construct_expr;
using testsupport::expr_sampler;

namespace {

bool identical(const Fun &a, const Fun &b) {
    return a.series == b.series && a.vscale == b.vscale && a.happy == b.happy &&
           a.diagnostics.cutoff == b.diagnostics.cutoff && a.diagnostics.plateau_point == b.diagnostics.plateau_point;
}

const char *const kSmoothCorpus[] = {
    "exp(x)",          "sin(5*x)",          "1./(1+25*x.^2)",   "3*exp(-1./(x+1))-(x+1)", "log(1.1-x)",
    "exp(x)./(1+x.^2)", "cos(128*acos(x))", "tanh(10*x)",       "sqrt(2-x)",              "exp(sin(pi*x))",
    "x.^2+x.^5",       "atan(3*x)+1i*x",    "cosh(x)-sinh(2*x)",
};

} // namespace

TEST_SUITE("construct") {

TEST_CASE("next_grid") {
    CHECK(next_grid(17, false) == 33);
    CHECK(next_grid(129, false) == 257);
    CHECK(next_grid(16, true) == 32);
}

TEST_CASE("grid ladders are 2^k+1 or 2^k and strictly increasing") {
    const Construction c = construct_expr("log(1.1-x)");
    CHECK(c.report.grids_tried == std::vector<std::size_t>{17, 33, 65, 129});
    ConstructConfig trig;
    trig.trig = true;
    const Construction t = construct_expr("exp(sin(pi*x))", trig);
    for (std::size_t i = 0; i < t.report.grids_tried.size(); ++i)
        CHECK(t.report.grids_tried[i] == (std::size_t{16} << i));
}

TEST_CASE("sample_test examples") {
    // A candidate checked against its own evaluation passes.
    const Fun f = construct_expr("exp(x)*sin(3*x)").fun;
    const Sampler self{[&f](double x) { return f(x); }, Interval{}};
    CHECK(sample_test(self, f, 0x1p-52));

    // T_128 on the 17-point grid aliases to the constant 1.
    const Sampler t128 = expr_sampler("cos(128*acos(x))");
    const Fun coarse = sample_grid(t128, Basis::Chebyshev, 17, 0x1p-52);
    CHECK(std::abs(coarse.series.coeffs()[0] - 1.0) < 1e-13);
    const CoefficientSeries one(Basis::Chebyshev, Interval{}, {1.0});
    CHECK_FALSE(sample_test(t128, one, 0x1p-52, 1.0));

    // exp(x) interpolated on 33 points is accurate off the grid.
    const Sampler e = expr_sampler("exp(x)");
    const Fun g33 = sample_grid(e, Basis::Chebyshev, 33, 0x1p-52);
    CHECK(sample_test(e, g33, 0x1p-52));
    double worst = 0.0;
    for (double t : kSampleTestPoints)
        worst = std::max(worst, std::abs(g33(t) - std::exp(t)));
    CHECK(worst < 1e-15);
}

TEST_CASE("sample_test points are never grid points") {
    for (std::size_t n : {16, 32, 64, 128, 1024, 65536}) {
        for (double x : cheb_points(n))
            for (double t : kSampleTestPoints)
                REQUIRE(x != t);
        for (double s : trig_points(n))
            for (double t : kSampleTestPoints)
                REQUIRE(s / 3.141592653589793 != t);
    }
}

TEST_CASE("construction is deterministic and resampling changes nothing") {
    for (const char *src : {"3*exp(-1./(x+1))-(x+1)", "sin(1./(x+.3i))", "log(1.1-x)"}) {
        const Construction a = construct_expr(src);
        const Construction b = construct_expr(src);
        CHECK(identical(a.fun, b.fun));
        ConstructConfig cfg;
        cfg.resample = true;
        const Construction c = construct_expr(src, cfg);
        CHECK(identical(a.fun, c.fun));
    }
}

TEST_CASE("reused coarse values are bitwise the fine grid's even points") {
    for (std::size_t n : {16, 32, 64, 128, 4096})
        for (const Interval iv : {Interval{}, Interval{-3.0, 7.5}, Interval{1e-3, 2e-3}}) {
            const auto coarse = cheb_points(n), fine = cheb_points(2 * n);
            for (std::size_t j = 0; j <= n; ++j)
                REQUIRE(map_from_reference(coarse[j], iv) == map_from_reference(fine[2 * j], iv));
        }
}

TEST_CASE("accepted funs are accurate to 1e3 tol vscale") {
    for (const char *src : kSmoothCorpus) {
        const Sampler s = expr_sampler(src);
        const Construction c = construct(s, {});
        CAPTURE(src);
        REQUIRE(c.fun.happy);
        const double err = testsupport::max_error(c.fun, [&s](double x) { return s.f(x); });
        CHECK(err <= 1e3 * 0x1p-52 * c.fun.vscale);
        CHECK(c.fun.length() == c.fun.diagnostics.cutoff);
    }
}

TEST_CASE("vscale is the largest sample on the accepting grid") {
    const Sampler s = expr_sampler("exp(x)");
    const Construction c = construct(s, {});
    CHECK(c.fun.vscale == std::exp(1.0));
    const Sampler neg = expr_sampler("-2-x.^2", Interval{-2.0, 1.0});
    CHECK(construct(neg, {}).fun.vscale == 6.0);
}

TEST_CASE("power-of-two scaling leaves lengths and chop indices unchanged") {
    const Sampler base = expr_sampler("1./(1+25*x.^2)");
    const Construction ref = construct(base, {});
    for (int e : {-499, -300, -17, 1, 64, 499}) {
        const double s = std::ldexp(1.0, e);
        const Sampler scaled{[&](double x) { return s * base.f(x); }, Interval{}};
        const Construction c = construct(scaled, {});
        CHECK(c.fun.length() == ref.fun.length());
        CHECK(c.fun.diagnostics.cutoff == ref.fun.diagnostics.cutoff);
        CHECK(c.fun.diagnostics.plateau_point == ref.fun.diagnostics.plateau_point);
        CHECK(c.report.grids_tried == ref.report.grids_tried);
    }
}

TEST_CASE("tol_scale multiplies the tolerance") {
    ConstructConfig a, b;
    a.tol = 0x1p-32;
    b.tol_scale = 0x1p20;
    CHECK(identical(construct_expr("log(1.1-x)", a).fun, construct_expr("log(1.1-x)", b).fun));
}

TEST_CASE("exhausting the ladder returns the full grid with a warning") {
    ConstructConfig cfg;
    cfg.max_samples = 65;
    const Construction c = construct_expr("cos(128*acos(x))", cfg);
    CHECK_FALSE(c.fun.happy);
    CHECK(c.fun.length() == 65);
    REQUIRE(c.report.warning);
    CHECK(*c.report.warning == "function not resolved using 65 pts");
    CHECK(c.report.sample_test_failures == 3);
}

TEST_CASE("non-finite samples abort with the offending point") {
    try {
        (void)construct_expr("1./x");
        FAIL("expected a sampling error");
    } catch (const SamplingError &e) {
        CHECK(e.x() == 0.0);
        CHECK(std::isinf(e.value().real()));
    }
}

TEST_CASE("min_samples skips the coarse grids") {
    ConstructConfig cfg;
    cfg.min_samples = 100;
    CHECK(construct_expr("exp(x)", cfg).report.grids_tried.front() == 129);
}

TEST_CASE("doublelength samples at twice the selected degree") {
    ConstructConfig cfg;
    cfg.doublelength = true;
    const Construction c = construct_expr("exp(x)", cfg);
    REQUIRE(c.doubled);
    const std::size_t d = c.fun.length() - 1;
    CHECK(c.doubled->length() == 2 * d + 2);
    CHECK_FALSE(c.doubled->happy);
    for (std::size_t k = 0; k <= d; ++k)
        CHECK(std::abs(c.doubled->series.coeffs()[k] - c.fun.series.coeffs()[k]) <= 1e-15 * c.fun.vscale);

    cfg.trig = true;
    const Construction t = construct_expr("exp(sin(pi*x))", cfg);
    REQUIRE(t.doubled);
    CHECK(t.doubled->series.max_wavenumber() == 2 * t.fun.series.max_wavenumber());
}

TEST_CASE("trig mode is more compact for periodic functions") {
    ConstructConfig cfg;
    cfg.trig = true;
    const Construction t = construct_expr("exp(sin(pi*x))", cfg);
    const Construction c = construct_expr("exp(sin(pi*x))");
    REQUIRE(t.fun.happy);
    CHECK(t.fun.length() % 2 == 1);
    CHECK(t.fun.length() < c.fun.length());
    const double err = testsupport::max_error(t.fun, [](double x) { return std::exp(std::sin(3.141592653589793 * x)); });
    CHECK(err <= 1e3 * 0x1p-52 * t.fun.vscale);
}

TEST_CASE("general intervals") {
    const Sampler s = expr_sampler("exp(x)", Interval{0.0, 10.0});
    const Construction c = construct(s, {});
    REQUIRE(c.fun.happy);
    CHECK(testsupport::max_error(c.fun, [](double x) { return std::exp(x); }) <= 1e3 * 0x1p-52 * c.fun.vscale);
    CHECK(std::abs(c.fun(0.0) - 1.0) <= 1e3 * 0x1p-52 * c.fun.vscale);
}

TEST_CASE("noise below tol^(2/3) is chopped at a loose tolerance") {
    // Same mechanism as the 1e-2 case, at an amplitude whose coefficient
    // floor sits under the flat-plateau ceiling for tol = 1e-8.
    const Sampler noisy{[](double x) { return Complex(std::exp(x) + 1e-9 * testsupport::pseudonoise(x)); },
                        Interval{}};
    ConstructConfig cfg;
    cfg.tol = 1e-8;
    const Construction c = construct(noisy, cfg);
    CHECK(c.fun.happy);
    CHECK(c.fun.length() < 40);
}

TEST_CASE("invalid configuration is rejected") {
    ConstructConfig cfg;
    cfg.tol = 2.0;
    CHECK_THROWS_AS(construct_expr("x", cfg), std::invalid_argument);
    CHECK_THROWS_AS(construct(expr_sampler("x", Interval{1.0, 1.0}), {}), std::invalid_argument);
}

}
