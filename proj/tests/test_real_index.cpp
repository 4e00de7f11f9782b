#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "stcalc/fib_kernel.hpp"
#include "stcalc/real_index.hpp"

using namespace stcalc;

namespace {
const EvalContext P1(3.0, -2.0);   // phi = 2, phi' = 1
const EvalContext P2(1.0, -0.21);  // phi = 0.7, phi' = 0.3
} // namespace

TEST_CASE("eval context invariants") {
    CHECK(P1.phi == Cplx(2.0, 0.0));
    CHECK(P1.phi_prime == Cplx(1.0, 0.0));
    CHECK(std::abs(P1.phi * P1.phi_prime - Cplx(-P1.t, 0.0)) < 1e-12);
    CHECK(std::abs(P2.phi - Cplx(0.7, 0.0)) < 1e-12);
    CHECK(P1.branch_safe());
    CHECK(!EvalContext(1.0, 1.0).branch_safe());
    CHECK(EvalContext(2.0, -1.0).degenerate);
    CHECK_THROWS_AS(EvalContext(0.0, 1.0), ParameterError);
    CHECK_THROWS_AS(EvalContext(1.0, 0.0), ParameterError);
}

TEST_CASE("fibonacci function at integer and half indices") {
    EvalContext fib(1.0, 1.0);
    CHECK(std::abs(fib_fn(Cplx(5.0, 0.0), fib) - Cplx(5.0, 0.0)) < 1e-12);
    // {1/2}_{3,-2} = (sqrt(2)-1)/(2-1)
    CHECK(std::abs(fib_fn(Cplx(0.5, 0.0), P1) - Cplx(std::sqrt(2.0) - 1.0, 0.0)) < 1e-12);
    // degenerate point: {alpha} -> alpha
    EvalContext degen(2.0, -1.0);
    CHECK(std::abs(fib_fn(Cplx(7.0, 0.0), degen) - Cplx(7.0, 0.0)) < 1e-12);
}

TEST_CASE("lucas function values") {
    CHECK(std::abs(lucas_fn(Cplx(0.5, 0.0), P1) - Cplx(std::sqrt(2.0) + 1.0, 0.0)) < 1e-12);
    CHECK(std::abs(lucas_fn(Cplx(0.0, 0.0), P2) - Cplx(2.0, 0.0)) < 1e-14);
    EvalContext fib(1.0, 1.0);
    CHECK(std::abs(lucas_fn(Cplx(4.0, 0.0), fib) - Cplx(7.0, 0.0)) < 1e-12);
}

TEST_CASE("fibonomial function") {
    EvalContext fib(1.0, 1.0);
    CHECK(std::abs(fibonomial_fn(Cplx(4.0, 0.0), 2, fib) - Cplx(6.0, 0.0)) < 1e-12);
    CHECK(fibonomial_fn(Cplx(0.37, 0.8), 0, P1) == Cplx(1.0, 0.0));
    CHECK(std::abs(fibonomial_fn(Cplx(0.5, 0.0), 1, P1) - Cplx(std::sqrt(2.0) - 1.0, 0.0)) < 1e-12);
    CHECK_THROWS_AS(fibonomial_fn(Cplx(1.0, 0.0), -1, P1), UnsupportedIndexError);
    // integer alpha terminates exactly
    CHECK(fibonomial_fn(Cplx(3.0, 0.0), 7, P1) == Cplx(0.0, 0.0));
}

TEST_CASE("vanishing denominator at singular (s,t) is rejected") {
    // {3} = s^2 + t vanishes at (1,-1)
    EvalContext sing(1.0, -1.0);
    CHECK_THROWS_AS(fibotorial_fn(3, sing), SingularParameterError);
    CHECK_THROWS_AS(fibonomial_fn(Cplx(0.5, 0.0), 3, sing), SingularParameterError);
}

TEST_CASE("negative fibonomial residuals") {
    CHECK(neg_fibonomial_check(Cplx(2.0, 0.0), 3, P1) <= 1e-8);
    CHECK(neg_fibonomial_check(Cplx(1.0, 0.0), 0, P1) == 0.0);
    CHECK(neg_fibonomial_check(Cplx(2.5, 0.0), 4, P2) <= 1e-8);
    for (long k = 0; k <= 10; ++k) CHECK(neg_fibonomial_check(Cplx(1.7, 0.0), k, P1) <= 1e-8);
}

TEST_CASE("parameter scaling residuals") {
    EvalContext fib(1.0, 1.0);
    CHECK(scale_check(Cplx(5.0, 0.0), 2, 3.0, fib) <= 1e-8);
    CHECK(scale_check(Cplx(2.0, 0.0), 2, 1.0, P1) <= 1e-12);
    CHECK(scale_check(Cplx(0.5, 0.0), 3, 2.0, P1) <= 1e-8);
    CHECK_THROWS_AS(scale_check(Cplx(1.0, 0.0), 1, -2.0, P1), ParameterError);
}

TEST_CASE("doubling at arbitrary index") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        Cplx a(re(rng), im(rng));
        for (const EvalContext* ctx : {&P1, &P2})
            CHECK(rel_residual(fib_fn(2.0 * a, *ctx), fib_fn(a, *ctx) * lucas_fn(a, *ctx)) <=
                  1e-10);
    }
}

TEST_CASE("reciprocal identity for the half index") {
    for (const EvalContext* ctx : {&P1, &P2}) {
        Cplx lhs = fib_fn(Cplx(0.5, 0.0), *ctx) * (std::sqrt(ctx->phi) + std::sqrt(ctx->phi_prime));
        CHECK(rel_residual(lhs, Cplx(1.0, 0.0)) <= 1e-10);
    }
}

TEST_CASE("negative index identity at t < 0") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        Cplx a(re(rng), im(rng));
        for (const EvalContext* ctx : {&P1, &P2}) {
            Cplx rhs = -principal_pow(Cplx(-ctx->t, 0.0), -a) * fib_fn(a, *ctx);
            CHECK(rel_residual(fib_fn(-a, *ctx), rhs) <= 1e-8);
        }
    }
}

TEST_CASE("agreement with the exact kernel at integer indices") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> sd(0.5, 3.0), td(0.25, 2.0);
    for (int i = 0; i < 20; ++i) {
        EvalContext ctx(sd(rng), td(rng));
        for (long n = 0; n <= 25; ++n) {
            double exact = fib_poly(n).eval(ctx.s, ctx.t);
            CHECK(rel_residual(fib_fn(Cplx(static_cast<double>(n), 0.0), ctx),
                               Cplx(exact, 0.0)) <= 1e-9);
        }
    }
}

TEST_CASE("pascal recurrences at complex index") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(-1.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        Cplx a(re(rng), im(rng));
        for (const EvalContext* ctx : {&P1, &P2})
            for (long k = 1; k <= 6; ++k) {
                Cplx lhs = fibonomial_fn(a + 1.0, k, *ctx);
                Cplx r1 = ipow(ctx->phi, k) * fibonomial_fn(a, k, *ctx) +
                          principal_pow(ctx->phi_prime, a + 1.0 - static_cast<double>(k)) *
                              fibonomial_fn(a, k - 1, *ctx);
                Cplx r2 = ipow(ctx->phi_prime, k) * fibonomial_fn(a, k, *ctx) +
                          principal_pow(ctx->phi, a + 1.0 - static_cast<double>(k)) *
                              fibonomial_fn(a, k - 1, *ctx);
                CHECK(rel_residual(lhs, r1) <= 1e-8);
                CHECK(rel_residual(lhs, r2) <= 1e-8);
            }
    }
}

TEST_CASE("principal power conventions") {
    CHECK(principal_pow(Cplx(0.0, 0.0), Cplx(0.0, 0.0)) == Cplx(1.0, 0.0));
    CHECK(principal_pow(Cplx(0.0, 0.0), Cplx(2.5, 0.0)) == Cplx(0.0, 0.0));
    CHECK_THROWS_AS(principal_pow(Cplx(0.0, 0.0), Cplx(-1.0, 0.0)), ParameterError);
    CHECK(principal_pow(Cplx(-2.0, 0.0), Cplx(3.0, 0.0)) == Cplx(-8.0, 0.0));
    // principal branch: (-1)^(1/2) = i
    CHECK(std::abs(principal_pow(Cplx(-1.0, 0.0), Cplx(0.5, 0.0)) - Cplx(0.0, 1.0)) < 1e-15);
}
