#pragma once

#include <string>
#include <vector>

#include "stcalc/eval_context.hpp"
#include "stcalc/laurent.hpp"

namespace stcalc {

/// Central (s,t)-binomial coefficient {2n choose n}, exact.
LaurentPoly central_binomial(long n);

/// Generalized Catalan polynomial C_n = {2n choose n} / {n+1}; the division
/// must be exact (a failure is an identity violation, never bad input).
LaurentPoly catalan_poly(long n);

/// Normalizer L_n = (-t)^(-n^2/2) 4^n / (<n>! prod_{k<n}(phi^(k+1/2) + phi'^(k+1/2))).
/// Equals 1 identically at the double-root point (2,-1). Real-valued for t < 0,
/// where (-t)-powers take the positive real root.
Cplx ln_value(long n, const EvalContext& ctx);

/// Relative residual of L_{n+1} = 4 (-t)^-(n+1/2) L_n / (<n+1> (phi^(n+1/2) + phi'^(n+1/2))).
double ln_recurrence_residual(long n, const EvalContext& ctx);

struct HalfBinomialCheck {
    Cplx lhs;        // fibonomial_fn at +-1/2
    Cplx rhs;        // closed-form side
    double residual; // relative
};

/// {1/2 choose n} against {1/2} {2n choose n} (-1)^(n-1) L_{n-1} / (4^(n-1) <n> {2n-1}); n >= 1.
HalfBinomialCheck half_binomial(long n, const EvalContext& ctx);
/// {-1/2 choose n} against (-1)^n 4^-n {2n choose n} L_n; n >= 0.
HalfBinomialCheck neg_half_binomial(long n, const EvalContext& ctx);

enum class GfKind { sqrt_series, recip_sqrt, catalan, n_catalan, weighted_catalan };

GfKind gf_kind_from_string(const std::string& name);
std::string to_string(GfKind kind);

/// Coefficient-level comparison of one generating-function theorem: lhs from
/// the defining fibonomial series, rhs from the theorem's closed form.
struct GfReport {
    std::vector<Cplx> lhs, rhs;
    std::vector<double> rel_err;
    double max_rel_err = 0.0;
    bool hypothesis_ok = true; // |v| <= |t|
};

GfReport gf_coefficients(GfKind kind, int N, Cplx v, const EvalContext& ctx);

enum class AnalogKind { sqrt2_a, sqrt2_b, sqrt_two_thirds, even_part };

/// Partial sums of the closed-form series at the fixed evaluation points:
/// sqrt2_a = reciprocal-sqrt series at x = 1/8, sqrt2_b = sqrt series at
/// x = 1/4, sqrt_two_thirds = x = -1/8, even_part = the even-index
/// combination sum central(2n) L_{2n} v^C(2n,2) / 64^n.
Cplx sqrt2_analog_value(AnalogKind kind, int N, Cplx v, const EvalContext& ctx);

} // namespace stcalc
