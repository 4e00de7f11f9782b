#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "stcalc/deformed.hpp"
#include "stcalc/deformed_symbolic.hpp"
#include "stcalc/fib_kernel.hpp"
#include "stcalc/real_index.hpp"
#include "stcalc/st_derivative.hpp"

using namespace stcalc;

namespace {
const EvalContext MERS(3.0, -2.0); // phi = 2, phi' = 1
const EvalContext FIB(1.0, 1.0);
const EvalContext DEGEN(2.0, -1.0);
} // namespace

TEST_CASE("deform params validate u") {
    CHECK_THROWS_AS(DeformParams(Cplx(0.0, 0.0), Cplx(1.0, 0.0)), ParameterError);
}

TEST_CASE("finite powers, small cases") {
    DeformParams d(Cplx(0.9, 0.0), Cplx(-0.4, 0.0));
    CHECK(deformed_power_finite(0, Cplx(2.0, 1.0), Cplx(0.3, 0.0), d, MERS) == Cplx(1.0, 0.0));
    Cplx x(0.7, 0.0), y(-0.2, 0.0);
    CHECK(rel_residual(deformed_power_finite(1, x, y, d, MERS), x + y) <= 1e-15);
    // n = 2: u x^2 + {2} x y + v y^2 with {2}_{3,-2} = 3
    Cplx expect = d.u * x * x + 3.0 * x * y + d.v * y * y;
    CHECK(rel_residual(deformed_power_finite(2, x, y, d, MERS), expect) <= 1e-14);
}

TEST_CASE("symbolic expansion matches the displayed small powers") {
    auto p2 = deformed_power_symbolic(2);
    CHECK(p2.terms().size() == 3);
    CHECK(p2.coeff({2, 0, 1, 0}) == QuadExt(1));
    CHECK(p2.coeff({1, 1, 0, 0}) == QuadExt(LaurentPoly::var_s()));
    CHECK(p2.coeff({0, 2, 0, 1}) == QuadExt(1));
    // n = 4, x^2 y^2 u v coefficient is {3}<2>
    auto p4 = deformed_power_symbolic(4);
    CHECK(p4.coeff({2, 2, 1, 1}) == QuadExt(fib_poly(3) * lucas_poly(2)));
    // n = 3: u^3 x^3 + {3} u x^2 y + {3} v x y^2 + v^3 y^3
    auto p3 = deformed_power_symbolic(3);
    CHECK(p3.coeff({3, 0, 3, 0}) == QuadExt(1));
    CHECK(p3.coeff({2, 1, 1, 0}) == QuadExt(fib_poly(3)));
    CHECK(p3.coeff({1, 2, 0, 1}) == QuadExt(fib_poly(3)));
    CHECK(p3.coeff({0, 3, 0, 3}) == QuadExt(1));
}

TEST_CASE("series terminates at integer exponents and matches the finite power") {
    DeformParams d(Cplx(1.0, 0.0), Cplx(0.5, 0.0));
    Cplx x(0.8, 0.0), y(0.3, 0.0);
    auto res = deformed_series_partial({Cplx(3.0, 0.0), x, y, 20}, d, MERS);
    for (int n = 4; n <= 20; ++n) CHECK(std::abs(res.terms[n]) <= 1e-14);
    CHECK(rel_residual(res.value, deformed_power_finite(3, x, y, d, MERS)) <= 1e-12);
    // alpha = 0: bare 1
    auto zero = deformed_series_partial({Cplx(0.0, 0.0), x, y, 10}, d, MERS);
    CHECK(zero.value == Cplx(1.0, 0.0));
}

TEST_CASE("alpha = -1 reciprocal series has a Cauchy tail") {
    DeformParams d(Cplx(1.0, 0.0), Cplx(0.3, 0.0));
    auto s60 = deformed_series_partial({Cplx(-1.0, 0.0), Cplx(1.0, 0.0), Cplx(-0.2, 0.0), 60},
                                       d, FIB);
    Cplx s40(0.0, 0.0);
    for (int n = 0; n <= 40; ++n) s40 += s60.terms[n];
    CHECK(std::abs(s60.value - s40) <= 1e-10);
}

TEST_CASE("x = 0 queries") {
    DeformParams d(Cplx(1.0, 0.0), Cplx(0.5, 0.0));
    auto r = deformed_series_partial({Cplx(2.0, 0.0), Cplx(0.0, 0.0), Cplx(0.3, 0.0), 10}, d, MERS);
    // only the n = alpha term survives: v^C(2,2) y^2
    CHECK(rel_residual(r.value, d.v * Cplx(0.09, 0.0)) <= 1e-14);
}

TEST_CASE("product form: examples and Gauss reduction") {
    CHECK(deformed_product_phi(1, Cplx(0.4, 0.0), Cplx(0.6, 0.0), MERS) == Cplx(1.0, 0.0));
    CHECK(rel_residual(deformed_product_phi(3, Cplx(1.0, 0.0), Cplx(1.0, 0.0), MERS),
                       Cplx(30.0, 0.0)) <= 1e-14);
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> xy(-1.5, 1.5), sd(0.5, 2.5), td(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        double t = td(rng);
        if (std::abs(t) < 0.1) t = 0.5;
        EvalContext ctx(sd(rng), t);
        Cplx x(xy(rng), 0.0), y(xy(rng), 0.0);
        DeformParams d(ctx.phi, ctx.phi_prime);
        for (int n = 0; n <= 8; ++n)
            CHECK(rel_residual(deformed_power_finite(n, x, y, d, ctx),
                               deformed_product_phi(n, x, y, ctx)) <= 1e-9);
    }
}

TEST_CASE("telescoping ratio of the infinite product at matched truncation") {
    Cplx x(1.0, 0.0), y(0.4, 0.0);
    const int K = 30;
    for (int n = 1; n <= 4; ++n) {
        Cplx shifted_x = ipow(MERS.phi, n) * x;
        Cplx shifted_y = ipow(MERS.phi_prime, n) * y;
        Cplx num = deformed_product_phi(K + n, x, y, MERS);
        Cplx den = deformed_product_phi(K, shifted_x, shifted_y, MERS);
        CHECK(rel_residual(num / den, deformed_product_phi(n, x, y, MERS)) <= 1e-10);
    }
    auto inf = deformed_product_phi_inf(x, y, MERS);
    CHECK(inf.convergent);
    CHECK(inf.tail_bound <= 1e-14 * std::abs(y / x) * 2.0);
}

TEST_CASE("convergence classifier regimes") {
    auto entire = classify_convergence(Cplx(2.5, 0.0),
                                       DeformParams(Cplx(1.0, 0.0), Cplx(0.5, 0.0)), FIB);
    CHECK(entire.regime == ConvergenceRegime::entire);
    auto disk = classify_convergence(Cplx(2.0, 0.0),
                                     DeformParams(Cplx(1.0, 0.0), Cplx(1.0, 0.0)), FIB);
    CHECK(disk.regime == ConvergenceRegime::disk);
    double expect = std::abs((FIB.phi / FIB.phi_prime) * (1.0 / FIB.phi_prime));
    CHECK(disk.radius == doctest::Approx(expect).epsilon(1e-12));
    auto point = classify_convergence(Cplx(2.0, 0.0),
                                      DeformParams(Cplx(2.0, 0.0), Cplx(1.0, 0.0)), FIB);
    CHECK(point.regime == ConvergenceRegime::point_only);
    // |q| = 1 (complex conjugate roots) is refused
    CHECK_THROWS_AS(classify_convergence(Cplx(1.0, 0.0),
                                         DeformParams(Cplx(1.0, 0.0), Cplx(0.5, 0.0)),
                                         EvalContext(1.0, -1.0)),
                    UnsupportedRegimeError);
    // degenerate double root uses the |uv| vs 1 comparison
    auto dg = classify_convergence(Cplx(2.0, 0.0),
                                   DeformParams(Cplx(0.5, 0.0), Cplx(1.0, 0.0)), DEGEN);
    CHECK(dg.regime == ConvergenceRegime::entire);
    auto dgd = classify_convergence(Cplx(3.0, 0.0),
                                    DeformParams(Cplx(2.0, 0.0), Cplx(0.5, 0.0)), DEGEN);
    CHECK(dgd.regime == ConvergenceRegime::disk);
    CHECK(dgd.radius == doctest::Approx(4.0).epsilon(1e-12)); // |u^(alpha-1)| = 2^2
}

TEST_CASE("empirical behavior matches the classifier") {
    // entire: Cauchy tail far below 1e-10 at |x| = 2
    DeformParams ent(Cplx(1.0, 0.0), Cplx(0.5, 0.0));
    auto s60 = deformed_series_partial({Cplx(2.5, 0.0), Cplx(1.0, 0.0), Cplx(2.0, 0.0), 60},
                                       ent, FIB);
    Cplx s40(0.0, 0.0);
    for (int n = 0; n <= 40; ++n) s40 += s60.terms[n];
    CHECK(std::abs(s60.value - s40) <= 1e-10);
    // point_only: terms grow by more than 10x over 20 consecutive indices
    auto grow = deformed_series_partial({Cplx(2.5, 0.0), Cplx(1.0, 0.0), Cplx(1.0, 0.0), 35},
                                        DeformParams(Cplx(2.0, 0.0), Cplx(1.0, 0.0)), FIB);
    CHECK(std::abs(grow.terms[35]) > 10.0 * std::abs(grow.terms[15]));
}

TEST_CASE("rational power series") {
    // n = m: exactly 1 + x
    for (long m : {1L, 2L, 5L}) {
        auto r = rational_power_series(m, m, Cplx(0.7, 0.0), 12, MERS);
        CHECK(rel_residual(r.series[0], Cplx(1.0, 0.0)) <= 1e-14);
        CHECK(rel_residual(r.series[1], Cplx(1.0, 0.0)) <= 1e-14);
        for (int k = 2; k <= 12; ++k) CHECK(std::abs(r.series[k]) <= 1e-12);
    }
    // n=2, m=1 matches the finite power (1 (+)_{1,v} x)^(2)
    auto r2 = rational_power_series(2, 1, Cplx(0.7, 0.0), 8, MERS);
    Cplx at = r2.series.eval(Cplx(0.3, 0.0));
    Cplx fin = deformed_power_finite(2, Cplx(1.0, 0.0), Cplx(0.3, 0.0),
                                     DeformParams(Cplx(1.0, 0.0), Cplx(0.7, 0.0)), MERS);
    CHECK(rel_residual(at, fin) <= 1e-12);
    // n=1, m=2 at v = -t: the k=1 coefficient is {1/2}
    auto rh = rational_power_series(1, 2, Cplx(2.0, 0.0), 8, MERS);
    CHECK(rel_residual(rh.series[1], Cplx(std::sqrt(2.0) - 1.0, 0.0)) <= 1e-10);
    CHECK(rh.hypothesis_ok);
    CHECK(!rational_power_series(1, 2, Cplx(2.5, 0.0), 8, MERS).hypothesis_ok);
    CHECK_THROWS_AS(rational_power_series(1, 0, Cplx(1.0, 0.0), 8, MERS), ParameterError);
}

TEST_CASE("symbolic properties for integer exponents") {
    for (int n = 0; n <= 8; ++n) {
        CHECK(check_add_shift_symbolic(n, 1));
        CHECK(check_add_shift_symbolic(n, 2));
        CHECK(check_homogeneity_symbolic(n, Rational(3)));
        CHECK(check_rescale_symbolic(n, Rational(2)));
        CHECK(check_swap_symbolic(n));
        CHECK(check_edge_symbolic(n));
    }
}

TEST_CASE("fractional-index identities via partial sums") {
    DeformParams d(Cplx(1.0, 0.0), Cplx(0.3, 0.0));
    Cplx x(0.3, 0.0), y(0.2, 0.0);
    for (double a : {2.5, 0.5, -1.5}) {
        Cplx alpha(a, 0.0);
        CHECK(add_shift_residual(1, alpha, x, y, d, 48, MERS) <= 1e-8);
        CHECK(add_shift_residual(2, alpha, x, y, d, 48, MERS) <= 1e-8);
        CHECK(homogeneity_residual(alpha, Cplx(1.7, 0.0), x, y, d, 48, MERS) <= 1e-8);
        CHECK(rescale_residual(alpha, 2.0, x, y, d, 48, MERS) <= 1e-8);
        CHECK(edge_residual(true, alpha, x, d, 48, MERS) <= 1e-12);
        CHECK(edge_residual(false, alpha, y, d, 48, MERS) <= 1e-12);
    }
}

TEST_CASE("argument swap: exact for integer exponents, genuine gap otherwise") {
    DeformParams d(Cplx(1.0, 0.0), Cplx(0.3, 0.0));
    Cplx x(0.3, 0.0), y(0.2, 0.0);
    CHECK(swap_residual(Cplx(3.0, 0.0), x, y, d, 48, MERS) <= 1e-12);
    CHECK(swap_residual(Cplx(5.0, 0.0), x, y, d, 48, MERS) <= 1e-12);
    // For fractional exponents the two series expand at opposite ends; their
    // sums differ by an N-independent amount. Pin the gap so a change in
    // behavior is caught either way.
    double g48 = swap_residual(Cplx(2.5, 0.0), x, y, d, 48, MERS);
    double g96 = swap_residual(Cplx(2.5, 0.0), x, y, d, 96, MERS);
    CHECK(g48 > 1e-6);
    CHECK(std::abs(g48 - g96) <= 1e-12);
}

TEST_CASE("derivative theorems") {
    DeformParams d(Cplx(0.8, 0.0), Cplx(0.5, 0.0));
    Cplx alpha(2.5, 0.0), a(1.0, 0.0), x(0.4, 0.0);
    CHECK(deriv_x_residual(alpha, a, x, d, 48, MERS) <= 1e-8);
    CHECK(deriv_y_residual(alpha, a, x, d, 48, MERS) <= 1e-8);
    CHECK(deriv_minus_residual(alpha, a, x, d, 48, MERS) <= 1e-8);
    for (int k = 1; k <= 4; ++k)
        CHECK(deriv_k_residual(k, alpha, a, Cplx(0.3, 0.0), d, 48, MERS) <= 1e-7);
}

TEST_CASE("iterated derivative of the minus form (series route)") {
    // D^k (a (-) x)^(alpha) = (-1)^k v^C(k,2) {k}! {alpha choose k} (a (-) v^k x)^(alpha-k)
    DeformParams d(Cplx(0.8, 0.0), Cplx(0.5, 0.0));
    Cplx alpha(2.5, 0.0), a(1.0, 0.0), x(0.3, 0.0);
    for (int k = 1; k <= 4; ++k) {
        const int N = 48;
        TruncatedSeries<Cplx> f(N);
        for (int j = 0; j <= N; ++j) {
            Cplx coef = fibonomial_fn(alpha, j, MERS);
            f[j] = coef * principal_pow(d.u, binom2(alpha - static_cast<double>(j))) *
                   ipow(d.v, binom2_int(j)) * principal_pow(a, alpha - static_cast<double>(j)) *
                   ipow(Cplx(-1.0, 0.0), j);
        }
        auto fib_of = [&](int nn) { return fib_fn(Cplx(nn, 0.0), MERS); };
        auto cur = f;
        for (int i = 0; i < k; ++i) cur = st_derivative_series(cur, fib_of);
        Cplx lhs = cur.eval(x);
        Cplx rhs = ipow(Cplx(-1.0, 0.0), k) * ipow(d.v, binom2_int(k)) * fibotorial_fn(k, MERS) *
                   fibonomial_fn(alpha, k, MERS) *
                   deformed_series_partial(
                       {alpha - static_cast<double>(k), a, -(ipow(d.v, k) * x), N}, d, MERS)
                       .value;
        CHECK(rel_residual(lhs, rhs) <= 1e-7);
    }
}

TEST_CASE("root shift identity") {
    CHECK(root_shift_residual(1, 2, Cplx(2.0, 0.0), Cplx(0.3, 0.0), 48, MERS) <= 1e-8);
    CHECK(root_shift_residual(1, 3, Cplx(1.0, 0.0), Cplx(0.25, 0.0), 48, MERS) <= 1e-8);
    CHECK(root_shift_residual(2, 3, Cplx(1.5, 0.0), Cplx(0.2, 0.0), 48, MERS) <= 1e-8);
}

TEST_CASE("u != 1 series route through the u = 1 reduction") {
    DeformParams d(Cplx(0.7, 0.0), Cplx(0.4, 0.0));
    Cplx direct = deformed_series_partial({Cplx(2.5, 0.0), Cplx(1.0, 0.0), Cplx(0.3, 0.0), 48},
                                          d, MERS).value;
    CHECK(rel_residual(direct, deformed_one_plus_reduced(Cplx(2.5, 0.0), Cplx(0.3, 0.0), d, 48,
                                                         MERS)) <= 1e-10);
}

TEST_CASE("theorem dispatcher") {
    TheoremPoint p;
    p.alpha = Cplx(2.5, 0.0);
    p.d = DeformParams(Cplx(1.0, 0.0), Cplx(0.3, 0.0));
    CHECK(theorem_residual(TheoremKind::add_shift_1, p, MERS) <= 1e-8);
    CHECK(theorem_kind_from_string("swap") == TheoremKind::swap_args);
    CHECK(to_string(TheoremKind::deriv_k) == "deriv_k");
    CHECK_THROWS_AS(theorem_kind_from_string("nope"), ParameterError);
}

TEST_CASE("pantograph residuals") {
    // alpha = 1: f = 1 + x, identity holds to rounding
    CHECK(pantograph_residual(Cplx(1.0, 0.0), Cplx(0.5, 0.0), Cplx(0.2, 0.0), 16, MERS) <= 1e-14);
    CHECK(pantograph_residual(Cplx(3.0, 0.0), Cplx(0.5, 0.0), Cplx(0.05, 0.0), 64, MERS) <= 1e-7);
    // degenerate point: f'(x/v) + x f'(x) = alpha f(x)
    CHECK(pantograph_residual(Cplx(2.0, 0.0), Cplx(0.5, 0.0), Cplx(0.05, 0.0), 64, DEGEN) <= 1e-7);
    CHECK_THROWS_AS(pantograph_residual(Cplx(1.0, 0.0), Cplx(0.0, 0.0), Cplx(0.1, 0.0), 16, MERS),
                    ParameterError);
    // truncation error decays as N doubles in the disk regime
    double r16 = pantograph_residual(Cplx(2.5, 0.0), Cplx(2.0, 0.0), Cplx(0.7, 0.0), 16, MERS);
    double r32 = pantograph_residual(Cplx(2.5, 0.0), Cplx(2.0, 0.0), Cplx(0.7, 0.0), 32, MERS);
    double r64 = pantograph_residual(Cplx(2.5, 0.0), Cplx(2.0, 0.0), Cplx(0.7, 0.0), 64, MERS);
    CHECK(r32 <= 1.1 * r16);
    CHECK(r64 <= 1.1 * r32);
    CHECK(r64 <= 1e-7);
    CHECK(r16 > 1e-9); // genuinely measurable at N=16
}

TEST_CASE("series truncation bound is enforced") {
    DeformParams d;
    CHECK_THROWS_AS(deformed_series_partial({Cplx(1.0, 0.0), Cplx(1.0, 0.0), Cplx(0.1, 0.0), 600},
                                            d, MERS),
                    ParameterError);
}
