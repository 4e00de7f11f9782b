#pragma once

#include <vector>

#include "stcalc/eval_context.hpp"

namespace stcalc {

/// Generalized Fibonacci function {alpha} = (phi^a - phi'^a)/(phi - phi').
/// At a degenerate context (double root) the analytic limit a*(s/2)^(a-1).
Cplx fib_fn(Cplx alpha, const EvalContext& ctx);

/// Generalized Lucas function <alpha> = phi^a + phi'^a; degenerate limit 2(s/2)^a.
Cplx lucas_fn(Cplx alpha, const EvalContext& ctx);

/// {m} for integer m >= 1; throws SingularParameterError when the value
/// vanishes (within 1e-13 of its natural Binet scale) at this (s,t).
Cplx fib_fn_nonzero(long m, const EvalContext& ctx);

/// Numeric fibotorial {k}! = {1}{2}...{k}. Throws SingularParameterError when
/// some factor {m} vanishes at this (s,t).
Cplx fibotorial_fn(long k, const EvalContext& ctx);

/// Generalized fibonomial {alpha choose k} = {a}{a-1}...{a-k+1} / {k}!, k >= 0.
Cplx fibonomial_fn(Cplx alpha, long k, const EvalContext& ctx);

/// Coefficients {alpha choose k} v^C(k,2) for k = 0..count-1, built as one
/// running product: the fibonomial and the v-power separately leave the
/// double range for large k when |v| != 1, their product does not.
std::vector<Cplx> fibonomial_v_coeffs(Cplx alpha, Cplx v, int count, const EvalContext& ctx);

/// Relative residual of the negative-index identity
/// {-a choose k} = (-1)^k (-t)^{-ak - C(k,2)} {a+k-1 choose k}.
/// Branch-safe at t < 0; elsewhere the (-t)-power picks the principal branch.
double neg_fibonomial_check(Cplx alpha, long k, const EvalContext& ctx);

/// Relative residual of the parameter-scaling identity
/// {a choose k}_{as, a^2 t} = a^{k(a-k)} {a choose k}_{s,t}, for a > 0.
double scale_check(Cplx alpha, long k, double a, const EvalContext& ctx);

} // namespace stcalc
