#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stcalc/catalan.hpp"
#include "stcalc/fib_kernel.hpp"
#include "stcalc/real_index.hpp"

using namespace stcalc;

namespace {
const EvalContext P1(3.0, -2.0);
const EvalContext P2(1.0, -0.21);
const EvalContext DEGEN(2.0, -1.0);
const long kClassicalCatalan[] = {1, 1, 2, 5, 14, 42, 132};
} // namespace

TEST_CASE("central binomial coefficients") {
    CHECK(central_binomial(0) == LaurentPoly(1));
    CHECK(central_binomial(1) == LaurentPoly::var_s());
    CHECK(central_binomial(2).eval(Rational(1), Rational(1)) == Rational(6));
}

TEST_CASE("catalan polynomials") {
    CHECK(catalan_poly(0) == LaurentPoly(1));
    CHECK(catalan_poly(2) ==
          LaurentPoly::monomial(2, 0) + LaurentPoly::monomial(0, 1, Rational(2)));
    CHECK(catalan_poly(3).eval(Rational(2), Rational(-1)) == Rational(5));
}

TEST_CASE("catalan polynomials: divisibility and nonnegative integer coefficients") {
    for (long n = 0; n <= 12; ++n) {
        LaurentPoly c = catalan_poly(n);
        CHECK(c * fib_poly(n + 1) == central_binomial(n));
        if (n <= 10)
            for (const auto& [m, cc] : c.terms()) {
                CHECK(cc.is_integer());
                CHECK(cc.sign() > 0);
                CHECK(m.t_exp >= 0);
            }
    }
}

TEST_CASE("degenerate specialization reproduces the classical catalan numbers") {
    for (long n = 0; n <= 6; ++n)
        CHECK(catalan_poly(n).eval(Rational(2), Rational(-1)) == Rational(kClassicalCatalan[n]));
}

TEST_CASE("normalizer L_n") {
    CHECK(ln_value(0, P1) == Cplx(1.0, 0.0));
    for (long n = 0; n <= 10; ++n)
        CHECK(rel_residual(ln_value(n, DEGEN), Cplx(1.0, 0.0)) <= 1e-12);
    // L_1(3,-2) = 4 * 2^(-1/2) / (3 (sqrt(2)+1))
    Cplx expect(4.0 / std::sqrt(2.0) / (3.0 * (std::sqrt(2.0) + 1.0)), 0.0);
    CHECK(rel_residual(ln_value(1, P1), expect) <= 1e-12);
}

TEST_CASE("L_n recurrence") {
    CHECK(ln_recurrence_residual(0, P1) <= 1e-9);
    CHECK(ln_recurrence_residual(5, P1) <= 1e-9);
    CHECK(ln_recurrence_residual(3, P2) <= 1e-9);
    for (long n = 0; n <= 12; ++n) {
        CHECK(ln_recurrence_residual(n, P1) <= 1e-9);
        CHECK(ln_recurrence_residual(n, P2) <= 1e-9);
    }
}

TEST_CASE("half-integer fibonomial closed forms") {
    // n = 1 collapses to {1/2} on both sides
    auto h1 = half_binomial(1, P1);
    CHECK(rel_residual(h1.lhs, Cplx(std::sqrt(2.0) - 1.0, 0.0)) <= 1e-12);
    CHECK(h1.residual <= 1e-12);
    CHECK(half_binomial(4, P1).residual <= 1e-8);
    CHECK(neg_half_binomial(3, P1).residual <= 1e-8);
    for (long n = 1; n <= 12; ++n) {
        CHECK(half_binomial(n, P1).residual <= 1e-8);
        CHECK(half_binomial(n, P2).residual <= 1e-8);
    }
    for (long n = 0; n <= 12; ++n) {
        CHECK(neg_half_binomial(n, P1).residual <= 1e-8);
        CHECK(neg_half_binomial(n, P2).residual <= 1e-8);
    }
    CHECK_THROWS_AS(half_binomial(0, P1), UnsupportedIndexError);
}

TEST_CASE("generating function coefficients at the documented points") {
    for (GfKind k : {GfKind::sqrt_series, GfKind::recip_sqrt, GfKind::catalan, GfKind::n_catalan,
                     GfKind::weighted_catalan}) {
        for (double v : {2.0, 1.0}) CHECK(gf_coefficients(k, 10, Cplx(v, 0.0), P1).max_rel_err <= 1e-8);
        for (double v : {0.21, 0.105})
            CHECK(gf_coefficients(k, 10, Cplx(v, 0.0), P2).max_rel_err <= 1e-8);
    }
}

TEST_CASE("catalan generating function leading coefficient is 2{1/2}") {
    auto rep = gf_coefficients(GfKind::catalan, 4, Cplx(2.0, 0.0), P1);
    Cplx expect = 2.0 * fib_fn(Cplx(0.5, 0.0), P1);
    CHECK(rel_residual(rep.lhs[0], expect) <= 1e-12);
    CHECK(rel_residual(rep.rhs[0], expect) <= 1e-12);
}

TEST_CASE("catalan generating function at the classical point") {
    auto rep = gf_coefficients(GfKind::catalan, 6, Cplx(1.0, 0.0), DEGEN);
    for (long n = 0; n <= 6; ++n) {
        CHECK(rel_residual(rep.lhs[n], Cplx(double(kClassicalCatalan[n]), 0.0)) <= 1e-8);
        CHECK(rel_residual(rep.rhs[n], Cplx(double(kClassicalCatalan[n]), 0.0)) <= 1e-8);
    }
    // n_catalan at the classical point: coefficients n * C_n
    auto nrep = gf_coefficients(GfKind::n_catalan, 6, Cplx(1.0, 0.0), DEGEN);
    for (long n = 0; n <= 6; ++n)
        CHECK(rel_residual(nrep.lhs[n], Cplx(double(n * kClassicalCatalan[n]), 0.0)) <= 1e-8);
}

TEST_CASE("hypothesis |v| <= |t| is flagged") {
    CHECK(gf_coefficients(GfKind::recip_sqrt, 4, Cplx(1.0, 0.0), P1).hypothesis_ok);
    CHECK(!gf_coefficients(GfKind::recip_sqrt, 4, Cplx(2.5, 0.0), P1).hypothesis_ok);
}

TEST_CASE("weighted catalan closed form at the classical point") {
    // coefficients (1/2) C_n {2n+1} <n+1> L_{n+1} -> classical C_n (2n+1) * 2 / 2
    auto rep = gf_coefficients(GfKind::weighted_catalan, 6, Cplx(1.0, 0.0), DEGEN);
    for (long n = 0; n <= 6; ++n) {
        double expect = double(kClassicalCatalan[n]) * double(2 * n + 1);
        CHECK(rel_residual(rep.rhs[n], Cplx(expect, 0.0)) <= 1e-8);
    }
}

TEST_CASE("sqrt2 analogs at the classical point") {
    Cplx a = sqrt2_analog_value(AnalogKind::sqrt2_a, 60, Cplx(1.0, 0.0), DEGEN);
    CHECK(std::abs(a - Cplx(std::sqrt(2.0), 0.0)) <= 1e-6);
    Cplx tt = sqrt2_analog_value(AnalogKind::sqrt_two_thirds, 60, Cplx(1.0, 0.0), DEGEN);
    CHECK(std::abs(tt - Cplx(std::sqrt(2.0 / 3.0), 0.0)) <= 1e-6);
    Cplx ev = sqrt2_analog_value(AnalogKind::even_part, 60, Cplx(1.0, 0.0), DEGEN);
    CHECK(std::abs(ev - Cplx((std::sqrt(2.0) + std::sqrt(2.0 / 3.0)) / 2.0, 0.0)) <= 1e-6);
    // the x = 1/4 sqrt-series converges only like N^(-3/2); alternating bound
    Cplx b = sqrt2_analog_value(AnalogKind::sqrt2_b, 60, Cplx(1.0, 0.0), DEGEN);
    CHECK(std::abs(b - Cplx(std::sqrt(2.0), 0.0)) <= 1e-3);
}

TEST_CASE("even part equals the average of the two analog series") {
    for (const EvalContext* ctx : {&P1, &DEGEN}) {
        Cplx sa = sqrt2_analog_value(AnalogKind::sqrt2_a, 40, Cplx(1.0, 0.0), *ctx);
        Cplx st2 = sqrt2_analog_value(AnalogKind::sqrt_two_thirds, 40, Cplx(1.0, 0.0), *ctx);
        Cplx ev = sqrt2_analog_value(AnalogKind::even_part, 40, Cplx(1.0, 0.0), *ctx);
        CHECK(rel_residual(ev, (sa + st2) / 2.0) <= 1e-10);
    }
}

TEST_CASE("n_catalan closed quotient form holds at the double-root point") {
    // (2x - (1-R)R)/(2xR) with R = sqrt(1-4x) against sum n C_n x^n.
    for (double x : {0.01, 0.05, 0.1}) {
        double R = std::sqrt(1.0 - 4.0 * x);
        double closed = (2.0 * x - (1.0 - R) * R) / (2.0 * x * R);
        double cat = 1.0, series = 0.0;
        std::vector<double> cats{1.0};
        for (int n = 1; n <= 30; ++n) {
            cat = cat * 2.0 * (2.0 * n - 1.0) / (n + 1.0);
            cats.push_back(cat);
        }
        for (int n = 30; n >= 1; --n) series = series * x + n * cats[n];
        series *= x;
        CHECK(rel_residual(Cplx(closed, 0.0), Cplx(series, 0.0)) <= 1e-8);
    }
}
