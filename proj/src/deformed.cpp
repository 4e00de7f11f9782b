#include "stcalc/deformed.hpp"

#include <cmath>

#include "stcalc/fib_kernel.hpp"
#include "stcalc/real_index.hpp"
#include "stcalc/st_derivative.hpp"

namespace stcalc {

namespace {

bool is_integer_valued(Cplx a) {
    return a.imag() == 0.0 && a.real() == std::nearbyint(a.real()) && std::abs(a.real()) < 1e15;
}

bool is_positive_real(Cplx z) { return z.imag() == 0.0 && z.real() > 0.0; }

void check_terms(int n) {
    if (n < 0 || n > kMaxSeriesTerms)
        throw ParameterError("series truncation out of range [0, 512]");
}

// Series partial sum with every argument explicit; the building block for the
// identity residuals.
Cplx sum_series(Cplx alpha, Cplx x, Cplx y, Cplx u, Cplx v, int terms, const EvalContext& ctx) {
    return deformed_series_partial({alpha, x, y, terms}, DeformParams(u, v), ctx).value;
}

} // namespace

Cplx deformed_power_finite(int n, Cplx x, Cplx y, const DeformParams& d, const EvalContext& ctx) {
    if (n < 0) throw UnsupportedIndexError("deformed_power_finite: n must be >= 0");
    Cplx acc(0.0, 0.0);
    for (int k = 0; k <= n; ++k) {
        double coef = fibonomial(n, k).eval(ctx.s, ctx.t);
        acc += coef * ipow(d.u, binom2_int(n - k)) * ipow(d.v, binom2_int(k)) *
               ipow(x, n - k) * ipow(y, k);
    }
    return acc;
}

PartialSumResult deformed_series_partial(const SeriesQuery& q, const DeformParams& d,
                                         const EvalContext& ctx) {
    check_terms(q.terms);
    PartialSumResult res;
    res.terms.assign(static_cast<std::size_t>(q.terms) + 1, Cplx(0.0, 0.0));
    const bool alpha_int = is_integer_valued(q.alpha);
    res.branch_safe = alpha_int || (is_positive_real(q.x) && is_positive_real(d.u));

    if (q.x == Cplx(0.0, 0.0)) {
        // 0^(alpha-n) is nonzero only at the exact integer alpha = n.
        if (alpha_int && q.alpha.real() >= 0.0 &&
            q.alpha.real() <= static_cast<double>(q.terms)) {
            int n = static_cast<int>(q.alpha.real());
            res.terms[static_cast<std::size_t>(n)] =
                fibonomial_fn(q.alpha, n, ctx) * ipow(d.v, binom2_int(n)) * ipow(q.y, n);
        }
    } else {
        // One running product: the fibonomial, the u/v powers and x^(alpha-n)
        // individually overflow or underflow doubles long before their product
        // does, and principal powers are exactly multiplicative factor by
        // factor (each uses the same principal Log).
        Cplx term = principal_pow(d.u, binom2(q.alpha)) * principal_pow(q.x, q.alpha);
        res.terms[0] = term;
        for (int n = 1; n <= q.terms; ++n) {
            if (term == Cplx(0.0, 0.0)) break;
            term *= fib_fn(q.alpha - static_cast<double>(n - 1), ctx) /
                    fib_fn_nonzero(n, ctx);
            if (term == Cplx(0.0, 0.0)) { // exact termination at integer alpha
                break;
            }
            term *= principal_pow(d.u, static_cast<double>(n) - q.alpha) * ipow(d.v, n - 1) *
                    (q.y / q.x);
            res.terms[static_cast<std::size_t>(n)] = term;
        }
    }
    for (const Cplx& t : res.terms) res.value += t;
    return res;
}

Cplx deformed_product_phi(int n, Cplx x, Cplx y, const EvalContext& ctx) {
    if (n < 0) throw UnsupportedIndexError("deformed_product_phi: n must be >= 0");
    Cplx acc(1.0, 0.0);
    for (int k = 0; k < n; ++k)
        acc *= ipow(ctx.phi, k) * x + ipow(ctx.phi_prime, k) * y;
    return acc;
}

InfProductResult deformed_product_phi_inf(Cplx x, Cplx y, const EvalContext& ctx, int max_factors) {
    InfProductResult res;
    const double aq = std::abs(ctx.q);
    double qk = 1.0;
    for (int k = 0; k < max_factors; ++k) {
        if (aq < 1.0 && qk < 1e-14) {
            res.convergent = true;
            break;
        }
        res.value *= ipow(ctx.phi, k) * x + ipow(ctx.phi_prime, k) * y;
        ++res.factors;
        qk *= aq;
    }
    if (aq < 1.0)
        res.tail_bound = qk * (x == Cplx(0.0, 0.0) ? 1.0 : std::abs(y / x));
    return res;
}

ConvergenceClass classify_convergence(Cplx alpha, const DeformParams& d, const EvalContext& ctx) {
    ConvergenceClass res;
    res.q = ctx.q;
    const double uv = std::abs(d.u * d.v);
    double threshold;
    if (ctx.degenerate) {
        threshold = 1.0; // double-root theorem compares |uv| against 1
    } else {
        const double aq = std::abs(ctx.q);
        if (std::abs(aq - 1.0) <= 1e-12)
            throw UnsupportedRegimeError("classify_convergence: |q| = 1 is excluded");
        threshold = std::abs(ctx.t);
    }
    const double band = 1e-12 * std::max(uv, threshold);
    if (std::abs(uv - threshold) <= band) {
        res.regime = ConvergenceRegime::disk;
        if (ctx.degenerate) {
            res.radius = std::abs(principal_pow(d.u, alpha - 1.0));
        } else if (std::abs(ctx.q) < 1.0) {
            res.radius = std::abs((ctx.phi / ctx.phi_prime) *
                                  principal_pow(d.u / ctx.phi_prime, alpha - 1.0));
        } else {
            res.radius = std::abs((ctx.phi_prime / d.u) * principal_pow(d.u / ctx.phi, alpha));
        }
    } else if (uv < threshold) {
        res.regime = ConvergenceRegime::entire;
        res.radius = std::numeric_limits<double>::infinity();
    } else {
        res.regime = ConvergenceRegime::point_only;
        res.radius = 0.0;
    }
    return res;
}

RationalSeriesResult rational_power_series(long n, long m, Cplx v, int terms,
                                           const EvalContext& ctx) {
    if (m < 1) throw ParameterError("rational_power_series: m must be >= 1");
    check_terms(terms);
    RationalSeriesResult res{TruncatedSeries<Cplx>(terms), true};
    res.hypothesis_ok = std::abs(v) <= std::abs(ctx.t) * (1.0 + 1e-12);
    const Cplx alpha(static_cast<double>(n) / static_cast<double>(m), 0.0);
    auto coeffs = fibonomial_v_coeffs(alpha, v, terms + 1, ctx);
    for (int k = 0; k <= terms; ++k) res.series[k] = coeffs[static_cast<std::size_t>(k)];
    return res;
}

double add_shift_residual(int variant, Cplx alpha, Cplx x, Cplx y,
                          const DeformParams& d, int terms, const EvalContext& ctx) {
    if (variant != 1 && variant != 2)
        throw ParameterError("add_shift_residual: variant must be 1 or 2");
    const Cplx inner1 = (variant == 1) ? ctx.phi : ctx.phi_prime;
    const Cplx inner2 = (variant == 1) ? ctx.phi_prime : ctx.phi;
    Cplx lhs = sum_series(alpha + 1.0, x, y, d.u, d.v, terms, ctx);
    Cplx rhs = x * sum_series(alpha, d.u * x, inner1 * y, d.u, d.v, terms, ctx) +
               y * sum_series(alpha, inner2 * x, d.v * y, d.u, d.v, terms, ctx);
    return rel_residual(lhs, rhs);
}

double homogeneity_residual(Cplx alpha, Cplx z, Cplx x, Cplx y,
                            const DeformParams& d, int terms, const EvalContext& ctx) {
    Cplx lhs = principal_pow(z, alpha) * sum_series(alpha, x, y, d.u, d.v, terms, ctx);
    Cplx rhs = sum_series(alpha, z * x, z * y, d.u, d.v, terms, ctx);
    return rel_residual(lhs, rhs);
}

double rescale_residual(Cplx alpha, double a, Cplx x, Cplx y,
                        const DeformParams& d, int terms, const EvalContext& ctx) {
    if (a <= 0.0) throw ParameterError("rescale_residual: requires a > 0");
    EvalContext scaled(a * ctx.s, a * a * ctx.t, ctx.tol);
    Cplx lhs = sum_series(alpha, x, y, a * d.u, a * d.v, terms, scaled);
    Cplx rhs = principal_pow(Cplx(a, 0.0), binom2(alpha)) *
               sum_series(alpha, x, y, d.u, d.v, terms, ctx);
    return rel_residual(lhs, rhs);
}

double swap_residual(Cplx alpha, Cplx x, Cplx y,
                     const DeformParams& d, int terms, const EvalContext& ctx) {
    Cplx lhs = sum_series(alpha, x, y, d.u, d.v, terms, ctx);
    Cplx rhs = sum_series(alpha, y, x, d.v, d.u, terms, ctx);
    return rel_residual(lhs, rhs);
}

double edge_residual(bool zero_y, Cplx alpha, Cplx xy,
                     const DeformParams& d, int terms, const EvalContext& ctx) {
    if (zero_y) {
        Cplx lhs = sum_series(alpha, xy, Cplx(0.0, 0.0), d.u, d.v, terms, ctx);
        Cplx rhs = principal_pow(d.u, binom2(alpha)) * principal_pow(xy, alpha);
        return rel_residual(lhs, rhs);
    }
    // (0 (+)_{u,v} y) has no series representation in x for fractional alpha;
    // its value is defined through the swap (y (+)_{v,u} 0).
    Cplx lhs = sum_series(alpha, xy, Cplx(0.0, 0.0), d.v, d.u, terms, ctx);
    Cplx rhs = principal_pow(d.v, binom2(alpha)) * principal_pow(xy, alpha);
    return rel_residual(lhs, rhs);
}

double deriv_x_residual(Cplx alpha, Cplx a, Cplx x,
                        const DeformParams& d, int terms, const EvalContext& ctx) {
    NumericFn f = [&](Cplx w) { return sum_series(alpha, w, a, d.u, d.v, terms, ctx); };
    Cplx lhs = st_derivative_at(f, x, ctx);
    Cplx rhs = fib_fn(alpha, ctx) * sum_series(alpha - 1.0, d.u * x, a, d.u, d.v, terms, ctx);
    return rel_residual(lhs, rhs);
}

double deriv_y_residual(Cplx alpha, Cplx a, Cplx x,
                        const DeformParams& d, int terms, const EvalContext& ctx) {
    NumericFn f = [&](Cplx w) { return sum_series(alpha, a, w, d.u, d.v, terms, ctx); };
    Cplx lhs = st_derivative_at(f, x, ctx);
    Cplx rhs = fib_fn(alpha, ctx) * sum_series(alpha - 1.0, a, d.v * x, d.u, d.v, terms, ctx);
    return rel_residual(lhs, rhs);
}

double deriv_minus_residual(Cplx alpha, Cplx a, Cplx x,
                            const DeformParams& d, int terms, const EvalContext& ctx) {
    NumericFn f = [&](Cplx w) { return sum_series(alpha, a, -w, d.u, d.v, terms, ctx); };
    Cplx lhs = st_derivative_at(f, x, ctx);
    Cplx rhs = -fib_fn(alpha, ctx) * sum_series(alpha - 1.0, a, -(d.v * x), d.u, d.v, terms, ctx);
    return rel_residual(lhs, rhs);
}

double deriv_k_residual(int k, Cplx alpha, Cplx a, Cplx x,
                        const DeformParams& d, int terms, const EvalContext& ctx) {
    if (k < 0) throw ParameterError("deriv_k_residual: k must be >= 0");
    check_terms(terms);
    if (a == Cplx(0.0, 0.0) && !is_integer_valued(alpha))
        throw ParameterError("deriv_k_residual: a = 0 needs integer alpha");
    // (a (+)_{u,v} x)^(alpha) is a power series in x; apply the coefficient map
    // c_n -> {n} c_n (shifted) k times, then compare at the sample point.
    TruncatedSeries<Cplx> f(terms);
    for (int j = 0; j <= terms; ++j) {
        Cplx coef = fibonomial_fn(alpha, j, ctx);
        Cplx ap = (a == Cplx(0.0, 0.0))
                      ? (alpha.real() == static_cast<double>(j) ? Cplx(1.0, 0.0) : Cplx(0.0, 0.0))
                      : principal_pow(a, alpha - static_cast<double>(j));
        f[j] = coef * principal_pow(d.u, binom2(alpha - static_cast<double>(j))) *
               ipow(d.v, binom2_int(j)) * ap;
    }
    auto fib_of = [&](int nn) { return fib_fn(Cplx(static_cast<double>(nn), 0.0), ctx); };
    for (int i = 0; i < k; ++i)
        f = st_derivative_series(f, fib_of);
    Cplx lhs = f.eval(x);
    Cplx rhs = ipow(d.v, binom2_int(k)) * fibotorial_fn(k, ctx) * fibonomial_fn(alpha, k, ctx) *
               sum_series(alpha - static_cast<double>(k), a, ipow(d.v, k) * x, d.u, d.v,
                          terms, ctx);
    return rel_residual(lhs, rhs);
}

double root_shift_residual(long n, long m, Cplx v, Cplx x, int terms, const EvalContext& ctx) {
    auto lhs_series = rational_power_series(n + m, m, v, terms, ctx).series;
    auto mid_series = rational_power_series(n, m, v, terms, ctx).series;
    Cplx alpha(static_cast<double>(n) / static_cast<double>(m), 0.0);
    Cplx lhs = lhs_series.eval(x);
    Cplx rhs = mid_series.eval(ctx.phi * x) +
               x * sum_series(alpha, ctx.phi_prime, v * x, Cplx(1.0, 0.0), v, terms, ctx);
    return rel_residual(lhs, rhs);
}

TheoremKind theorem_kind_from_string(const std::string& name) {
    if (name == "add_shift_1") return TheoremKind::add_shift_1;
    if (name == "add_shift_2") return TheoremKind::add_shift_2;
    if (name == "homogeneity") return TheoremKind::homogeneity;
    if (name == "rescale") return TheoremKind::rescale;
    if (name == "swap") return TheoremKind::swap_args;
    if (name == "y_zero") return TheoremKind::y_zero;
    if (name == "x_zero") return TheoremKind::x_zero;
    if (name == "deriv_x") return TheoremKind::deriv_x;
    if (name == "deriv_y") return TheoremKind::deriv_y;
    if (name == "deriv_minus") return TheoremKind::deriv_minus;
    if (name == "deriv_k") return TheoremKind::deriv_k;
    if (name == "root_shift") return TheoremKind::root_shift;
    throw ParameterError("unknown theorem kind: " + name);
}

std::string to_string(TheoremKind kind) {
    switch (kind) {
        case TheoremKind::add_shift_1: return "add_shift_1";
        case TheoremKind::add_shift_2: return "add_shift_2";
        case TheoremKind::homogeneity: return "homogeneity";
        case TheoremKind::rescale: return "rescale";
        case TheoremKind::swap_args: return "swap";
        case TheoremKind::y_zero: return "y_zero";
        case TheoremKind::x_zero: return "x_zero";
        case TheoremKind::deriv_x: return "deriv_x";
        case TheoremKind::deriv_y: return "deriv_y";
        case TheoremKind::deriv_minus: return "deriv_minus";
        case TheoremKind::deriv_k: return "deriv_k";
        case TheoremKind::root_shift: return "root_shift";
    }
    return "?";
}

double theorem_residual(TheoremKind kind, const TheoremPoint& p, const EvalContext& ctx) {
    switch (kind) {
        case TheoremKind::add_shift_1: return add_shift_residual(1, p.alpha, p.x, p.y, p.d, p.terms, ctx);
        case TheoremKind::add_shift_2: return add_shift_residual(2, p.alpha, p.x, p.y, p.d, p.terms, ctx);
        case TheoremKind::homogeneity: return homogeneity_residual(p.alpha, p.z, p.x, p.y, p.d, p.terms, ctx);
        case TheoremKind::rescale:     return rescale_residual(p.alpha, p.scale_a, p.x, p.y, p.d, p.terms, ctx);
        case TheoremKind::swap_args:   return swap_residual(p.alpha, p.x, p.y, p.d, p.terms, ctx);
        case TheoremKind::y_zero:      return edge_residual(true, p.alpha, p.x, p.d, p.terms, ctx);
        case TheoremKind::x_zero:      return edge_residual(false, p.alpha, p.y, p.d, p.terms, ctx);
        case TheoremKind::deriv_x:     return deriv_x_residual(p.alpha, p.a, p.x, p.d, p.terms, ctx);
        case TheoremKind::deriv_y:     return deriv_y_residual(p.alpha, p.a, p.x, p.d, p.terms, ctx);
        case TheoremKind::deriv_minus: return deriv_minus_residual(p.alpha, p.a, p.x, p.d, p.terms, ctx);
        case TheoremKind::deriv_k:     return deriv_k_residual(p.k, p.alpha, p.a, p.x, p.d, p.terms, ctx);
        case TheoremKind::root_shift:  return root_shift_residual(p.n, p.m, p.d.v, p.x, p.terms, ctx);
    }
    throw ParameterError("theorem_residual: unknown kind");
}

Cplx deformed_one_plus_reduced(Cplx alpha, Cplx x, const DeformParams& d, int terms,
                               const EvalContext& ctx) {
    check_terms(terms);
    Cplx xr = principal_pow(d.u, Cplx(1.0, 0.0) - alpha) * x;
    Cplx base = sum_series(alpha, Cplx(1.0, 0.0), xr, Cplx(1.0, 0.0), d.u * d.v, terms, ctx);
    return principal_pow(d.u, binom2(alpha)) * base;
}

double pantograph_residual(Cplx alpha, Cplx v, Cplx x, int terms, const EvalContext& ctx) {
    if (v == Cplx(0.0, 0.0)) throw ParameterError("pantograph_residual: v must be nonzero");
    check_terms(terms);
    if (terms < 1) throw ParameterError("pantograph_residual: need at least one term");
    TruncatedSeries<Cplx> f(terms);
    auto coeffs = fibonomial_v_coeffs(alpha, v, terms + 1, ctx);
    for (int n = 0; n <= terms; ++n) f[n] = coeffs[static_cast<std::size_t>(n)];
    auto fib_of = [&](int nn) { return fib_fn(Cplx(static_cast<double>(nn), 0.0), ctx); };
    TruncatedSeries<Cplx> df = st_derivative_series(f, fib_of);
    Cplx lhs = df.eval(ctx.phi * x / v) +
               principal_pow(ctx.phi_prime, alpha - 1.0) * x * df.eval(x / ctx.phi_prime);
    Cplx rhs = fib_fn(alpha, ctx) * f.eval(x);
    return rel_residual(lhs, rhs);
}

} // namespace stcalc
