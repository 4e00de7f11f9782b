#pragma once

#include <functional>
#include <optional>

#include "stcalc/eval_context.hpp"
#include "stcalc/series.hpp"

namespace stcalc {

using NumericFn = std::function<Cplx(Cplx)>;

/// Two-point (s,t)-derivative (f(phi x) - f(phi' x)) / ((phi - phi') x).
/// At x = 0 the caller must supply f'(0) (the operator's value there);
/// degenerate contexts are rejected (the two-point form collapses).
Cplx st_derivative_at(const NumericFn& f, Cplx x, const EvalContext& ctx,
                      std::optional<Cplx> deriv_at_zero = std::nullopt);

/// The operator as a function object, for iterated application. x = 0 is not
/// handled (supply points away from zero).
NumericFn st_derivative_fn(NumericFn f, const EvalContext& ctx);

/// Residuals of the five algebraic rules (linearity, both product forms, both
/// quotient forms) at one sample point, each relative to the larger side.
struct RuleResiduals {
    double linearity = 0.0;
    double product_a = 0.0;
    double product_b = 0.0;
    double quotient_a = 0.0;
    double quotient_b = 0.0;
    double max() const;
};

RuleResiduals rule_residuals(const NumericFn& f, const NumericFn& g, Cplx x,
                             const EvalContext& ctx,
                             Cplx alpha = Cplx(2.0, 0.0), Cplx beta = Cplx(-3.0, 0.0));

/// Formal series derivative: c_n -> {n} c_n at position n-1; the order drops
/// by one. `fib_of(n)` supplies {n} in the scalar ring (fib_poly for the exact
/// path, fib_fn for the numeric path).
template <class S, class FibOf>
TruncatedSeries<S> st_derivative_series(const TruncatedSeries<S>& f, FibOf&& fib_of) {
    if (f.order() < 1)
        throw ParameterError("st_derivative_series: order must be >= 1");
    TruncatedSeries<S> r(f.order() - 1);
    for (int n = 1; n <= f.order(); ++n)
        r[n - 1] = fib_of(n) * f[n];
    return r;
}

/// x * D_{s,t}: c_n -> {n} c_n in place (order preserved).
template <class S, class FibOf>
TruncatedSeries<S> x_times_derivative_series(const TruncatedSeries<S>& f, FibOf&& fib_of) {
    TruncatedSeries<S> r(f.order());
    for (int n = 1; n <= f.order(); ++n)
        r[n] = fib_of(n) * f[n];
    return r;
}

} // namespace stcalc
