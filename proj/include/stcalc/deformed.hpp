#pragma once

#include <string>
#include <vector>

#include "stcalc/eval_context.hpp"
#include "stcalc/series.hpp"

namespace stcalc {

/// Deformation pair (u, v); u must be nonzero (convergence theorems require it).
struct DeformParams {
    Cplx u{1.0, 0.0};
    Cplx v{1.0, 0.0};
    DeformParams() = default;
    DeformParams(Cplx u_, Cplx v_) : u(u_), v(v_) {
        if (u == Cplx(0.0, 0.0)) throw ParameterError("DeformParams: u must be nonzero");
    }
};

/// One truncated evaluation request of the deformed binomial series.
struct SeriesQuery {
    Cplx alpha;
    Cplx x{1.0, 0.0};
    Cplx y{0.0, 0.0};
    int terms = 48; // partial-sum truncation N
};

inline constexpr int kMaxSeriesTerms = 512;

/// Finite deformed power (x (+)_{u,v} y)^(n), n >= 0: the k-sum of
/// {n choose k} u^C(n-k,2) v^C(k,2) x^(n-k) y^k with exact fibonomial values
/// evaluated at (s,t). Integer powers only; no branch choices involved.
Cplx deformed_power_finite(int n, Cplx x, Cplx y, const DeformParams& d, const EvalContext& ctx);

struct PartialSumResult {
    Cplx value{0.0, 0.0};
    std::vector<Cplx> terms; // individual summands, n = 0..N
    bool branch_safe = true; // false when non-integer powers of non-positive bases occurred
};

/// Partial sum of the deformed Newton binomial series
/// sum_n {alpha choose n} u^C(alpha-n,2) v^C(n,2) x^(alpha-n) y^n
/// with principal-branch powers.
PartialSumResult deformed_series_partial(const SeriesQuery& q, const DeformParams& d,
                                         const EvalContext& ctx);

/// Product form prod_{k=0}^{n-1} (phi^k x + phi'^k y) — the (u,v) = (phi,phi')
/// specialization of the finite power.
Cplx deformed_product_phi(int n, Cplx x, Cplx y, const EvalContext& ctx);

struct InfProductResult {
    Cplx value{1.0, 0.0};
    int factors = 0;      // number of factors actually multiplied
    double tail_bound = 0.0; // |q|^K * |y/x| factor-deviation estimate, when |q| < 1
    bool convergent = false; // true when |q| < 1 and the stopping rule fired
};

/// Truncation of prod_{k=0}^{K-1} (phi^k x + phi'^k y). When |q| < 1 the
/// truncation stops once |q|^K < 1e-14; otherwise exactly max_factors are
/// taken and the result is flagged non-convergent.
InfProductResult deformed_product_phi_inf(Cplx x, Cplx y, const EvalContext& ctx,
                                          int max_factors = 256);

enum class ConvergenceRegime { entire, disk, point_only };

struct ConvergenceClass {
    ConvergenceRegime regime = ConvergenceRegime::entire;
    double radius = 0.0; // infinity for entire, 0 for point_only
    Cplx q;
};

/// Convergence classification of (1 (+)_{u,v} x)^(alpha): compares |uv| with
/// |t| (with the degenerate double-root case compared against 1 and radius
/// |u^(alpha-1)|). The |q| = 1 boundary is refused, not approximated.
ConvergenceClass classify_convergence(Cplx alpha, const DeformParams& d, const EvalContext& ctx);

struct RationalSeriesResult {
    TruncatedSeries<Cplx> series;
    bool hypothesis_ok = true; // |v| <= |t| hypothesis of the definition
};

/// Coefficients {n/m choose k} v^C(k,2), k = 0..terms, of the rational-power
/// series (1 (+)_{1,v} x)^(n/m); negative n gives the reciprocal series.
/// Violating |v| <= |t| only flags the result.
RationalSeriesResult rational_power_series(long n, long m, Cplx v, int terms,
                                           const EvalContext& ctx);

// --- identity residuals (each evaluates both sides via truncated series) ---

/// Addition shift (x(+)y)^(a+1) = x(ux (+) phi y)^(a) + y(phi' x (+) vy)^(a);
/// variant 2 swaps phi and phi'.
double add_shift_residual(int variant, Cplx alpha, Cplx x, Cplx y,
                          const DeformParams& d, int terms, const EvalContext& ctx);
/// z^a (x(+)y)^(a) = (zx (+) zy)^(a).
double homogeneity_residual(Cplx alpha, Cplx z, Cplx x, Cplx y,
                            const DeformParams& d, int terms, const EvalContext& ctx);
/// (x (+)_{au,av} y)_{as,a^2 t}^(a) = a^C(alpha,2) (x (+)_{u,v} y)_{s,t}^(a).
double rescale_residual(Cplx alpha, double a, Cplx x, Cplx y,
                        const DeformParams& d, int terms, const EvalContext& ctx);
/// (x (+)_{u,v} y)^(a) = (y (+)_{v,u} x)^(a).
double swap_residual(Cplx alpha, Cplx x, Cplx y,
                     const DeformParams& d, int terms, const EvalContext& ctx);
/// (x (+) 0)^(a) = u^C(a,2) x^a   /   (0 (+) y)^(a) = v^C(a,2) y^a.
double edge_residual(bool zero_y, Cplx alpha, Cplx xy,
                     const DeformParams& d, int terms, const EvalContext& ctx);
/// D (x (+) a)^(alpha) = {alpha} (ux (+) a)^(alpha-1), via the two-point operator.
double deriv_x_residual(Cplx alpha, Cplx a, Cplx x,
                        const DeformParams& d, int terms, const EvalContext& ctx);
/// D (a (+) x)^(alpha) = {alpha} (a (+) vx)^(alpha-1).
double deriv_y_residual(Cplx alpha, Cplx a, Cplx x,
                        const DeformParams& d, int terms, const EvalContext& ctx);
/// D (a (-) x)^(alpha) = -{alpha} (a (-) vx)^(alpha-1).
double deriv_minus_residual(Cplx alpha, Cplx a, Cplx x,
                            const DeformParams& d, int terms, const EvalContext& ctx);
/// Iterated form D^k (a (+) x)^(alpha) = v^C(k,2) {k}! {alpha choose k}
/// (a (+) v^k x)^(alpha-k), applied through the series coefficient map.
double deriv_k_residual(int k, Cplx alpha, Cplx a, Cplx x,
                        const DeformParams& d, int terms, const EvalContext& ctx);
/// Root shift (1(+)_{1,v}x)^((n+m)/m) = (1(+)_{1,v}phi x)^(n/m)
///            + x (phi' (+)_{1,v} vx)^(n/m).
double root_shift_residual(long n, long m, Cplx v, Cplx x, int terms, const EvalContext& ctx);

enum class TheoremKind {
    add_shift_1, add_shift_2, homogeneity, rescale, swap_args,
    y_zero, x_zero, deriv_x, deriv_y, deriv_minus, deriv_k, root_shift
};

TheoremKind theorem_kind_from_string(const std::string& name);
std::string to_string(TheoremKind kind);

/// Named test point for the dispatcher (CLI / verify suites).
struct TheoremPoint {
    Cplx alpha{2.0, 0.0};
    Cplx x{0.3, 0.0};
    Cplx y{0.2, 0.0};
    Cplx a{1.0, 0.0};  // fixed argument of the derivative identities
    Cplx z{2.0, 0.0};  // homogeneity multiplier
    double scale_a = 2.0; // rescale factor
    DeformParams d{};
    int k = 2;
    long n = 1, m = 2; // root_shift exponents
    int terms = 48;
};

double theorem_residual(TheoremKind kind, const TheoremPoint& p, const EvalContext& ctx);

/// Residual of the proportional functional difference equation satisfied by
/// f = (1 (+)_{1,v} x)^(alpha):
/// (Df)(phi x / v) + phi'^(alpha-1) x (Df)(x / phi') = {alpha} f(x).
double pantograph_residual(Cplx alpha, Cplx v, Cplx x, int terms, const EvalContext& ctx);

/// (1 (+)_{u,v} x)^(alpha) routed through the u = 1 series via the reduction
/// (1 (+)_{u,v} x)^(a) = u^C(a,2) (1 (+)_{1,uv} u^(1-a) x)^(a). Branch-safe
/// for u > 0.
Cplx deformed_one_plus_reduced(Cplx alpha, Cplx x, const DeformParams& d, int terms,
                               const EvalContext& ctx);

} // namespace stcalc
