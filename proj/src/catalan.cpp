#include "stcalc/catalan.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "stcalc/fib_kernel.hpp"
#include "stcalc/real_index.hpp"
#include "stcalc/series.hpp"
#include "stcalc/st_derivative.hpp"

namespace stcalc {

namespace {

// (-t)^e with the positive real root whenever -t > 0 (the default test points
// all have t < 0); principal branch otherwise.
Cplx neg_t_pow(const EvalContext& ctx, double e) {
    if (-ctx.t > 0.0) return Cplx(std::pow(-ctx.t, e), 0.0);
    return principal_pow(Cplx(-ctx.t, 0.0), Cplx(e, 0.0));
}

Cplx half_power_product(long n, const EvalContext& ctx) {
    // prod_{k=0}^{n-1} (phi^(k+1/2) + phi'^(k+1/2)) = (sqrt(phi) (+)_{phi,phi'} sqrt(phi'))^(n)
    Cplx acc(1.0, 0.0);
    for (long k = 0; k < n; ++k)
        acc *= principal_pow(ctx.phi, k + 0.5) + principal_pow(ctx.phi_prime, k + 0.5);
    return acc;
}

Cplx lucastorial_fn(long n, const EvalContext& ctx) {
    Cplx acc(1.0, 0.0);
    for (long k = 1; k <= n; ++k)
        acc *= lucas_fn(Cplx(static_cast<double>(k), 0.0), ctx);
    return acc;
}

// L_{n+1} / L_n, straight from the recurrence.
Cplx ln_ratio(long n, const EvalContext& ctx) {
    return 4.0 * neg_t_pow(ctx, -(static_cast<double>(n) + 0.5)) /
           (lucas_fn(Cplx(static_cast<double>(n + 1), 0.0), ctx) *
            (principal_pow(ctx.phi, n + 0.5) + principal_pow(ctx.phi_prime, n + 0.5)));
}

// Incremental stream of r_n = {2n choose n} L_n v^C(n,2). CB_n and L_n
// separately leave the double range near n ~ 32, but their combined step
// ratio {2n+1}{2n+2}/{n+1}^2 * (L_{n+1}/L_n) * v^n stays moderate, which is
// what the long partial sums need.
class RecipCoeffStream {
public:
    RecipCoeffStream(Cplx v, const EvalContext& ctx) : v_(v), ctx_(ctx) {}
    long index() const { return n_; }
    Cplx current() const { return r_; }
    void advance() {
        auto f = [&](long k) { return fib_fn(Cplx(static_cast<double>(k), 0.0), ctx_); };
        Cplx cb_ratio = f(2 * n_ + 1) * f(2 * n_ + 2) / (f(n_ + 1) * f(n_ + 1));
        r_ *= cb_ratio * ln_ratio(n_, ctx_) * ipow(v_, n_);
        ++n_;
    }

private:
    Cplx v_;
    const EvalContext& ctx_;
    Cplx r_{1.0, 0.0};
    long n_ = 0;
};

} // namespace

LaurentPoly central_binomial(long n) {
    if (n < 0) throw UnsupportedIndexError("central_binomial: n must be >= 0");
    return fibonomial(2 * n, n);
}

LaurentPoly catalan_poly(long n) {
    if (n < 0) throw UnsupportedIndexError("catalan_poly: n must be >= 0");
    static std::mutex mu;
    static std::map<long, LaurentPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    LaurentPoly c = exact_div(central_binomial(n), fib_poly(n + 1));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, c);
    return c;
}

Cplx ln_value(long n, const EvalContext& ctx) {
    if (n < 0) throw UnsupportedIndexError("ln_value: n must be >= 0");
    Cplx den = lucastorial_fn(n, ctx) * half_power_product(n, ctx);
    if (std::abs(den) < 1e-300)
        throw SingularParameterError("ln_value: vanishing denominator");
    double n2 = static_cast<double>(n) * static_cast<double>(n);
    return neg_t_pow(ctx, -n2 / 2.0) * std::pow(4.0, static_cast<double>(n)) / den;
}

double ln_recurrence_residual(long n, const EvalContext& ctx) {
    if (n < 0) throw UnsupportedIndexError("ln_recurrence_residual: n must be >= 0");
    Cplx lhs = ln_value(n + 1, ctx);
    Cplx step = 4.0 * neg_t_pow(ctx, -(static_cast<double>(n) + 0.5)) /
                (lucas_fn(Cplx(static_cast<double>(n + 1), 0.0), ctx) *
                 (principal_pow(ctx.phi, n + 0.5) + principal_pow(ctx.phi_prime, n + 0.5)));
    Cplx rhs = step * ln_value(n, ctx);
    return rel_residual(lhs, rhs);
}

HalfBinomialCheck half_binomial(long n, const EvalContext& ctx) {
    if (n < 1) throw UnsupportedIndexError("half_binomial: n must be >= 1");
    HalfBinomialCheck r;
    r.lhs = fibonomial_fn(Cplx(0.5, 0.0), n, ctx);
    double cb = central_binomial(n).eval(ctx.s, ctx.t);
    double lv = lucas_poly(n).eval(ctx.s, ctx.t);
    double fv = fib_poly(2 * n - 1).eval(ctx.s, ctx.t);
    double sign = (n % 2 == 1) ? 1.0 : -1.0; // (-1)^(n-1)
    r.rhs = fib_fn(Cplx(0.5, 0.0), ctx) * cb * sign /
            (std::pow(4.0, static_cast<double>(n - 1)) * lv * fv) * ln_value(n - 1, ctx);
    r.residual = rel_residual(r.lhs, r.rhs);
    return r;
}

HalfBinomialCheck neg_half_binomial(long n, const EvalContext& ctx) {
    if (n < 0) throw UnsupportedIndexError("neg_half_binomial: n must be >= 0");
    HalfBinomialCheck r;
    r.lhs = fibonomial_fn(Cplx(-0.5, 0.0), n, ctx);
    double cb = central_binomial(n).eval(ctx.s, ctx.t);
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    r.rhs = sign / std::pow(4.0, static_cast<double>(n)) * cb * ln_value(n, ctx);
    r.residual = rel_residual(r.lhs, r.rhs);
    return r;
}

GfKind gf_kind_from_string(const std::string& name) {
    if (name == "sqrt") return GfKind::sqrt_series;
    if (name == "recip_sqrt") return GfKind::recip_sqrt;
    if (name == "catalan") return GfKind::catalan;
    if (name == "n_catalan") return GfKind::n_catalan;
    if (name == "weighted_catalan") return GfKind::weighted_catalan;
    throw ParameterError("unknown generating function kind: " + name);
}

std::string to_string(GfKind kind) {
    switch (kind) {
        case GfKind::sqrt_series: return "sqrt";
        case GfKind::recip_sqrt: return "recip_sqrt";
        case GfKind::catalan: return "catalan";
        case GfKind::n_catalan: return "n_catalan";
        case GfKind::weighted_catalan: return "weighted_catalan";
    }
    return "?";
}

GfReport gf_coefficients(GfKind kind, int N, Cplx v, const EvalContext& ctx) {
    if (N < 1) throw ParameterError("gf_coefficients: N must be >= 1");
    GfReport rep;
    rep.hypothesis_ok = std::abs(v) <= std::abs(ctx.t) * (1.0 + 1e-12);
    rep.lhs.resize(static_cast<std::size_t>(N) + 1);
    rep.rhs.resize(static_cast<std::size_t>(N) + 1);

    const Cplx half = fib_fn(Cplx(0.5, 0.0), ctx);
    auto cb = [&](long n) { return central_binomial(n).eval(ctx.s, ctx.t); };
    auto cat = [&](long n) { return catalan_poly(n).eval(ctx.s, ctx.t); };
    auto fibv = [&](long n) { return fib_poly(n).eval(ctx.s, ctx.t); };
    auto lucv = [&](long n) { return lucas_poly(n).eval(ctx.s, ctx.t); };

    // Defining streams: sqrt(1 (+)_{1,v} 4x) and (1 (-)_{1,v} 4x)^(-1/2),
    // both through the fibonomial functions (the series side of the theorems).
    auto sqrt_stream = [&](long k) {
        return fibonomial_fn(Cplx(0.5, 0.0), k, ctx) * std::pow(4.0, static_cast<double>(k)) *
               ipow(v, binom2_int(k));
    };
    auto recip_stream = [&](long k) {
        return ipow(Cplx(-1.0, 0.0), k) * fibonomial_fn(Cplx(-0.5, 0.0), k, ctx) *
               std::pow(4.0, static_cast<double>(k)) * ipow(v, binom2_int(k));
    };

    switch (kind) {
        case GfKind::sqrt_series:
            for (long n = 0; n <= N; ++n) {
                rep.lhs[n] = sqrt_stream(n);
                if (n == 0) {
                    rep.rhs[n] = Cplx(1.0, 0.0);
                } else {
                    double sign = (n % 2 == 1) ? 1.0 : -1.0;
                    rep.rhs[n] = 4.0 * half * cb(n) * sign * ln_value(n - 1, ctx) /
                                 (lucv(n) * fibv(2 * n - 1)) * ipow(v, binom2_int(n));
                }
            }
            break;
        case GfKind::recip_sqrt:
            for (long n = 0; n <= N; ++n) {
                rep.lhs[n] = recip_stream(n);
                rep.rhs[n] = cb(n) * ln_value(n, ctx) * ipow(v, binom2_int(n));
            }
            break;
        case GfKind::catalan:
            // (1 - sqrt(1 (-) 4x)) / (2x): negate the argument of the sqrt
            // stream, drop the constant 1, shift down one power of x.
            for (long n = 0; n <= N; ++n) {
                double sign = (n % 2 == 0) ? 1.0 : -1.0;
                rep.lhs[n] = sign * sqrt_stream(n + 1) / 2.0;
                rep.rhs[n] = 2.0 * half * cat(n) * ln_value(n, ctx) * ipow(v, binom2_int(n + 1));
            }
            break;
        case GfKind::n_catalan: {
            // x D_{s,t} applied to the catalan stream.
            TruncatedSeries<Cplx> base(N);
            for (long n = 0; n <= N; ++n) {
                double sign = (n % 2 == 0) ? 1.0 : -1.0;
                base[n] = sign * sqrt_stream(n + 1) / 2.0;
            }
            auto fib_of = [&](int nn) { return fib_fn(Cplx(static_cast<double>(nn), 0.0), ctx); };
            TruncatedSeries<Cplx> weighted = x_times_derivative_series(base, fib_of);
            for (long n = 0; n <= N; ++n) {
                rep.lhs[n] = weighted[static_cast<int>(n)];
                rep.rhs[n] = 2.0 * half * cat(n) * fibv(n) * ln_value(n, ctx) *
                             ipow(v, binom2_int(n + 1));
            }
            break;
        }
        case GfKind::weighted_catalan:
            // ((1 (-) 4x)^(-1/2) - 1) / (2x) against
            // (1/2) C_n {2n+1} <n+1> L_{n+1} v^C(n+1,2).
            for (long n = 0; n <= N; ++n) {
                rep.lhs[n] = recip_stream(n + 1) / 2.0;
                rep.rhs[n] = 0.5 * cat(n) * fibv(2 * n + 1) * lucv(n + 1) *
                             ln_value(n + 1, ctx) * ipow(v, binom2_int(n + 1));
            }
            break;
    }

    rep.rel_err.resize(rep.lhs.size());
    for (std::size_t i = 0; i < rep.lhs.size(); ++i) {
        rep.rel_err[i] = rel_residual(rep.lhs[i], rep.rhs[i]);
        rep.max_rel_err = std::max(rep.max_rel_err, rep.rel_err[i]);
    }
    return rep;
}

Cplx sqrt2_analog_value(AnalogKind kind, int N, Cplx v, const EvalContext& ctx) {
    if (N < 0) throw ParameterError("sqrt2_analog_value: N must be >= 0");
    RecipCoeffStream stream(v, ctx);
    Cplx acc(0.0, 0.0);
    switch (kind) {
        case AnalogKind::sqrt2_a:
            for (long n = 0; n <= N; ++n, stream.advance())
                acc += stream.current() / std::pow(8.0, static_cast<double>(n));
            return acc;
        case AnalogKind::sqrt2_b: {
            // 4{1/2} CB_n (-1)^(n-1) L_{n-1} v^C(n,2) / (<n> {2n-1} 4^n), with
            // CB_n L_{n-1} v^C(n,2) recovered from r_n / (L_n/L_{n-1}).
            acc = Cplx(1.0, 0.0);
            const Cplx half = fib_fn(Cplx(0.5, 0.0), ctx);
            stream.advance(); // r_1
            for (long n = 1; n <= N; ++n, stream.advance()) {
                double sign = (n % 2 == 1) ? 1.0 : -1.0;
                Cplx lucv = lucas_fn(Cplx(static_cast<double>(n), 0.0), ctx);
                Cplx fibv = fib_fn(Cplx(static_cast<double>(2 * n - 1), 0.0), ctx);
                acc += 4.0 * half * sign * stream.current() / ln_ratio(n - 1, ctx) /
                       (lucv * fibv) / std::pow(4.0, static_cast<double>(n));
            }
            return acc;
        }
        case AnalogKind::sqrt_two_thirds:
            for (long n = 0; n <= N; ++n, stream.advance()) {
                double sign = (n % 2 == 0) ? 1.0 : -1.0;
                acc += sign * stream.current() / std::pow(8.0, static_cast<double>(n));
            }
            return acc;
        case AnalogKind::even_part:
            for (long n = 0; 2 * n <= N; ++n) {
                acc += stream.current() / std::pow(64.0, static_cast<double>(n));
                stream.advance();
                stream.advance();
            }
            return acc;
    }
    throw ParameterError("sqrt2_analog_value: unknown kind");
}

} // namespace stcalc
