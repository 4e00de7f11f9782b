#include "stcalc/st_derivative.hpp"

#include <algorithm>

namespace stcalc {

Cplx st_derivative_at(const NumericFn& f, Cplx x, const EvalContext& ctx,
                      std::optional<Cplx> deriv_at_zero) {
    if (ctx.degenerate)
        throw ParameterError("st_derivative_at: degenerate (s,t); use the series form");
    if (x == Cplx(0.0, 0.0)) {
        if (deriv_at_zero) return *deriv_at_zero;
        throw ParameterError("st_derivative_at: x = 0 requires a supplied f'(0)");
    }
    return (f(ctx.phi * x) - f(ctx.phi_prime * x)) / ((ctx.phi - ctx.phi_prime) * x);
}

NumericFn st_derivative_fn(NumericFn f, const EvalContext& ctx) {
    if (ctx.degenerate)
        throw ParameterError("st_derivative_fn: degenerate (s,t); use the series form");
    Cplx phi = ctx.phi, phip = ctx.phi_prime;
    return [f = std::move(f), phi, phip](Cplx x) {
        return (f(phi * x) - f(phip * x)) / ((phi - phip) * x);
    };
}

double RuleResiduals::max() const {
    return std::max({linearity, product_a, product_b, quotient_a, quotient_b});
}

RuleResiduals rule_residuals(const NumericFn& f, const NumericFn& g, Cplx x,
                             const EvalContext& ctx, Cplx alpha, Cplx beta) {
    if (x == Cplx(0.0, 0.0))
        throw ParameterError("rule_residuals: x must be nonzero");
    const Cplx px = ctx.phi * x, qx = ctx.phi_prime * x;
    const Cplx gpx = g(px), gqx = g(qx);
    if (gpx == Cplx(0.0, 0.0) || gqx == Cplx(0.0, 0.0))
        throw ParameterError("rule_residuals: g vanishes at a sample point (quotient rules)");

    auto D = [&](const NumericFn& h) { return st_derivative_at(h, x, ctx); };
    const Cplx Df = D(f), Dg = D(g);

    RuleResiduals r;
    NumericFn comb = [&](Cplx z) { return alpha * f(z) + beta * g(z); };
    r.linearity = rel_residual(D(comb), alpha * Df + beta * Dg);

    NumericFn prod = [&](Cplx z) { return f(z) * g(z); };
    const Cplx Dfg = D(prod);
    r.product_a = rel_residual(Dfg, f(px) * Dg + gqx * Df);
    r.product_b = rel_residual(Dfg, f(qx) * Dg + gpx * Df);

    NumericFn quot = [&](Cplx z) { return f(z) / g(z); };
    const Cplx Dq = D(quot);
    r.quotient_a = rel_residual(Dq, (gpx * Df - f(px) * Dg) / (gpx * gqx));
    r.quotient_b = rel_residual(Dq, (gqx * Df - f(qx) * Dg) / (gpx * gqx));
    return r;
}

} // namespace stcalc
