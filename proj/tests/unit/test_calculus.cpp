#include "funcut/calculus.hpp"
#include "funcut/chop.hpp"

#include "oracle/reference_chop.hpp"
#include "support/test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

using namespace funcut;
using testsupport::construct_expr;

namespace {

Fun cheb(std::vector<Complex> c, Interval iv = {}) {
    return Fun{CoefficientSeries(Basis::Chebyshev, iv, std::move(c)), 1.0, {}, true};
}

bool bitwise(const Fun &a, const Fun &b) {
    const auto ca = a.series.coeffs(), cb = b.series.coeffs();
    return ca.size() == cb.size() && std::memcmp(ca.data(), cb.data(), ca.size() * sizeof(Complex)) == 0;
}

const char *const kCorpus[] = {"exp(x)", "sin(5*x)", "1./(1+25*x.^2)", "log(1.1-x)", "exp(x)./(1+x.^2)",
                               "tanh(4*x)", "sqrt(2-x)", "cos(20*x)+1i*x"};

} // namespace

TEST_SUITE("calculus") {

TEST_CASE("negate is exact and involutive") {
    const Fun zero = cheb({0.0});
    CHECK(negate(zero).series.coeffs()[0] == Complex(-0.0, -0.0));
    CHECK(std::abs(negate(zero).series.coeffs()[0]) == 0.0);
    for (const char *src : kCorpus) {
        const Fun f = construct_expr(src).fun;
        const Fun n = negate(f);
        CHECK(n.length() == f.length());
        CHECK(bitwise(negate(n), f));
        for (std::size_t k = 0; k < f.length(); ++k)
            REQUIRE(n.series.coeffs()[k] == -f.series.coeffs()[k]);
    }
}

TEST_CASE("add examples") {
    const Fun f = construct_expr("exp(x)").fun;
    CHECK(bitwise(add(f, cheb({0.0})), f));
    const Fun z = add(f, negate(f));
    CHECK(z.length() == f.length());
    for (Complex c : z.series.coeffs())
        CHECK(c == 0.0);
    const Fun s = add(cheb({0.5, 0.0, 0.5}), cheb({0.0, 1.0}));
    CHECK(s.series.coeffs()[0] == 0.5);
    CHECK(s.series.coeffs()[1] == 1.0);
    CHECK(s.series.coeffs()[2] == 0.5);
    CHECK(s.length() == 3);
}

TEST_CASE("add is commutative bitwise and only simplifies on request") {
    for (const char *a : kCorpus)
        for (const char *b : {"x", "exp(-x)", "sin(3*x)"}) {
            const Fun f = construct_expr(a).fun, g = construct_expr(b).fun;
            CHECK(bitwise(add(f, g), add(g, f)));
            CHECK(add(f, g).length() == std::max(f.length(), g.length()));
        }
    const Fun e = construct_expr("exp(x)").fun;
    const Fun almost = add(e, negate(add(e, cheb({0.0, 1e-300}))));
    CHECK(add(e, negate(e), true).length() == 1);
    CHECK(almost.length() == e.length());
}

TEST_CASE("add rejects mismatched operands") {
    const Fun f = cheb({1.0});
    CHECK_THROWS_AS(add(f, cheb({1.0}, Interval{0.0, 1.0})), std::invalid_argument);
    const Fun t{CoefficientSeries(Basis::Trigonometric, Interval{}, {1.0}), 1.0, {}, true};
    CHECK_THROWS_AS(add(f, t), std::invalid_argument);
    CHECK_THROWS_AS(multiply(f, t), std::invalid_argument);
}

TEST_CASE("multiply examples") {
    const Fun t1 = cheb({0.0, 1.0});
    const Fun sq = multiply(t1, t1);
    REQUIRE(sq.length() == 3);
    CHECK(sq.series.coeffs()[0] == 0.5);
    CHECK(sq.series.coeffs()[1] == 0.0);
    CHECK(sq.series.coeffs()[2] == 0.5);

    const Fun f = construct_expr("exp(x)").fun;
    CHECK(bitwise(multiply(f, cheb({1.0})), simplify(f)));

    const Fun one = multiply(f, construct_expr("exp(-x)").fun);
    CHECK(one.length() <= 5);
    for (double x = -1.0; x <= 1.0; x += 0.01)
        CHECK(std::abs(one(x) - 1.0) <= 1e-14);
}

TEST_CASE("multiply agrees with pointwise products") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const char *a : kCorpus)
        for (const char *b : {"cos(3*x)", "1./(2+x)", "exp(1i*x)"}) {
            const Fun f = construct_expr(a).fun, g = construct_expr(b).fun;
            const Fun h = multiply(f, g);
            const double bound = 1e3 * 0x1p-52 * f.vscale * g.vscale;
            for (int i = 0; i < 200; ++i) {
                const double x = u(rng);
                REQUIRE(std::abs(h(x) - f(x) * g(x)) <= bound);
            }
        }
}

TEST_CASE("trig multiply is a wavenumber convolution") {
    ConstructConfig cfg;
    cfg.trig = true;
    const Fun f = construct_expr("exp(sin(pi*x))", cfg).fun;
    const Fun g = construct_expr("cos(2*pi*x)", cfg).fun;
    const Fun h = multiply(f, g);
    CHECK(h.series.basis() == Basis::Trigonometric);
    for (double x = -1.0; x <= 1.0; x += 0.05)
        CHECK(std::abs(h(x) - f(x) * g(x)) <= 1e3 * 0x1p-52 * f.vscale * g.vscale);
}

TEST_CASE("cumsum examples") {
    const Fun F1 = cumsum(cheb({1.0}));
    REQUIRE(F1.length() == 2);
    CHECK(F1.series.coeffs()[0] == 1.0);
    CHECK(F1.series.coeffs()[1] == 1.0);

    const Fun E = cumsum(construct_expr("exp(x)").fun);
    CHECK(testsupport::max_error(E, [](double x) { return std::exp(x) - std::exp(-1.0); }, 100) <= 1e-14);
    CHECK(std::abs(E(-1.0)) <= 1e-15);

    const Fun shifted = cumsum(Fun{CoefficientSeries(Basis::Chebyshev, Interval{0.0, 2.0}, {1.0}), 1.0, {}, true});
    CHECK(shifted(0.0) == 0.0);
    CHECK(shifted(1.5).real() == doctest::Approx(1.5).epsilon(1e-15));

    const Fun t{CoefficientSeries(Basis::Trigonometric, Interval{}, {1.0}), 1.0, {}, true};
    CHECK_THROWS_AS(cumsum(t), std::invalid_argument);
}

TEST_CASE("cumsum pins F(a) = 0 and differentiates back to f") {
    for (const char *src : kCorpus) {
        const Fun f = construct_expr(src).fun;
        const Fun F = cumsum(f);
        CAPTURE(src);
        Complex alternating{};
        for (std::size_t k = 1; k < F.length(); ++k)
            alternating += (k % 2 == 0) ? F.series.coeffs()[k] : -F.series.coeffs()[k];
        CHECK(F.series.coeffs()[0] + alternating == Complex(0.0, 0.0));
        CHECK(std::abs(F(-1.0)) <= 1e-15 * F.vscale);
        const double h = 1e-5;
        for (double x = -0.9; x <= 0.9; x += 0.05) {
            const Complex d = (F(x + h) - F(x - h)) / (2 * h);
            REQUIRE(std::abs(d - f(x)) <= 1e-8 * f.vscale);
        }
    }
}

TEST_CASE("simplify examples") {
    const Fun f = construct_expr("exp(x)").fun;
    CHECK(simplify(f).length() <= f.length());
    CHECK(simplify(cheb(std::vector<Complex>(40))).length() == 1);

    std::vector<Complex> geo(21);
    double v = 1.0;
    for (auto &c : geo) {
        c = v;
        v /= 10;
    }
    std::vector<Complex> padded(geo);
    padded.resize(26);
    CHECK(simplify(cheb(geo)).length() == oracle::reference_chop(padded, 0x1p-52).cutoff);

    const Fun slow = cheb(std::vector<Complex>(30, 1.0));
    CHECK(bitwise(simplify(slow), slow));
}

TEST_CASE("simplify is idempotent in length over the corpus") {
    for (const char *src : kCorpus) {
        const Fun f = construct_expr(src).fun;
        for (const Fun &g : {f, cumsum(f), multiply(f, f)}) {
            const Fun once = simplify(g);
            CHECK(simplify(once).length() == once.length());
        }
    }
}

}
