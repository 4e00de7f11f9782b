#include "stcalc/real_index.hpp"

#include <cmath>
#include <string>

namespace stcalc {

Cplx fib_fn(Cplx alpha, const EvalContext& ctx) {
    if (ctx.degenerate)
        return alpha * principal_pow(Cplx(ctx.s / 2.0, 0.0), alpha - 1.0);
    return (principal_pow(ctx.phi, alpha) - principal_pow(ctx.phi_prime, alpha)) /
           (ctx.phi - ctx.phi_prime);
}

Cplx lucas_fn(Cplx alpha, const EvalContext& ctx) {
    if (ctx.degenerate)
        return 2.0 * principal_pow(Cplx(ctx.s / 2.0, 0.0), alpha);
    return principal_pow(ctx.phi, alpha) + principal_pow(ctx.phi_prime, alpha);
}

Cplx fib_fn_nonzero(long m, const EvalContext& ctx) {
    Cplx f = fib_fn(Cplx(static_cast<double>(m), 0.0), ctx);
    double scale = 1.0;
    if (!ctx.degenerate) {
        scale = (std::pow(std::abs(ctx.phi), static_cast<double>(m)) +
                 std::pow(std::abs(ctx.phi_prime), static_cast<double>(m))) /
                std::abs(ctx.phi - ctx.phi_prime);
    }
    if (std::abs(f) < 1e-13 * std::max(scale, 1.0))
        throw SingularParameterError("{" + std::to_string(m) + "} vanishes at this (s,t)");
    return f;
}

Cplx fibotorial_fn(long k, const EvalContext& ctx) {
    if (k < 0) throw UnsupportedIndexError("fibotorial_fn: negative index");
    Cplx acc(1.0, 0.0);
    for (long m = 1; m <= k; ++m) acc *= fib_fn_nonzero(m, ctx);
    return acc;
}

Cplx fibonomial_fn(Cplx alpha, long k, const EvalContext& ctx) {
    if (k < 0) throw UnsupportedIndexError("fibonomial_fn: negative k");
    // Interleaved quotient: numerator and fibotorial separately overflow
    // doubles for large k, while each ratio {alpha-j}/{j+1} stays bounded.
    Cplx acc(1.0, 0.0);
    for (long j = 0; j < k; ++j) {
        acc *= fib_fn(alpha - Cplx(static_cast<double>(j), 0.0), ctx) /
               fib_fn_nonzero(j + 1, ctx);
        if (acc == Cplx(0.0, 0.0)) break; // integer alpha: exact termination
    }
    return acc;
}

std::vector<Cplx> fibonomial_v_coeffs(Cplx alpha, Cplx v, int count, const EvalContext& ctx) {
    if (count < 0) throw UnsupportedIndexError("fibonomial_v_coeffs: negative count");
    std::vector<Cplx> c(static_cast<std::size_t>(count));
    if (count == 0) return c;
    c[0] = Cplx(1.0, 0.0);
    for (int k = 1; k < count; ++k) {
        if (c[static_cast<std::size_t>(k - 1)] == Cplx(0.0, 0.0)) break; // exact termination
        // c_k = c_{k-1} * {alpha-k+1}/{k} * v^(k-1)   (v^C(k,2) = prod v^j)
        c[static_cast<std::size_t>(k)] =
            c[static_cast<std::size_t>(k - 1)] *
            fib_fn(alpha - Cplx(static_cast<double>(k - 1), 0.0), ctx) /
            fib_fn_nonzero(k, ctx) * ipow(v, k - 1);
    }
    return c;
}

double neg_fibonomial_check(Cplx alpha, long k, const EvalContext& ctx) {
    Cplx lhs = fibonomial_fn(-alpha, k, ctx);
    Cplx expo = -alpha * static_cast<double>(k) - Cplx(static_cast<double>(binom2_int(k)), 0.0);
    Cplx factor = ipow(Cplx(-1.0, 0.0), k) * principal_pow(Cplx(-ctx.t, 0.0), expo);
    Cplx rhs = factor * fibonomial_fn(alpha + Cplx(static_cast<double>(k - 1), 0.0), k, ctx);
    return rel_residual(lhs, rhs);
}

double scale_check(Cplx alpha, long k, double a, const EvalContext& ctx) {
    if (a <= 0.0) throw ParameterError("scale_check: requires a > 0 (branch-safe scaling)");
    EvalContext scaled(a * ctx.s, a * a * ctx.t, ctx.tol);
    Cplx lhs = fibonomial_fn(alpha, k, scaled);
    Cplx rhs = principal_pow(Cplx(a, 0.0), static_cast<double>(k) * (alpha - static_cast<double>(k))) *
               fibonomial_fn(alpha, k, ctx);
    return rel_residual(lhs, rhs);
}

} // namespace stcalc
