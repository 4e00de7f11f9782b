#pragma once

#include <cmath>
#include <complex>

#include "stcalc/errors.hpp"

namespace stcalc {

using Cplx = std::complex<double>;

/// z^e by binary exponentiation (exact sign handling for real bases).
inline Cplx ipow(Cplx z, long e) {
    bool inv = e < 0;
    unsigned long k = static_cast<unsigned long>(inv ? -e : e);
    Cplx r(1.0, 0.0), b = z;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return inv ? 1.0 / r : r;
}

/// Principal-branch power z^a = exp(a Log z), Log with arg in (-pi, pi].
/// Integer-valued real exponents take the exact repeated-multiplication path,
/// which agrees with the principal branch and avoids spurious imaginary dust.
/// 0^0 = 1; 0^a = 0 for Re(a) > 0; otherwise a domain error.
inline Cplx principal_pow(Cplx z, Cplx a) {
    if (z == Cplx(0.0, 0.0)) {
        if (a == Cplx(0.0, 0.0)) return Cplx(1.0, 0.0);
        if (a.imag() == 0.0 && a.real() > 0.0) return Cplx(0.0, 0.0);
        throw ParameterError("principal_pow: 0 raised to a nonpositive power");
    }
    if (a.imag() == 0.0) {
        double ar = a.real();
        if (ar == std::nearbyint(ar) && std::abs(ar) < 1e15)
            return ipow(z, static_cast<long>(ar));
    }
    return std::exp(a * std::log(z));
}

inline Cplx principal_pow(Cplx z, double a) { return principal_pow(z, Cplx(a, 0.0)); }

/// Generalized binomial exponent C(z,2) = z(z-1)/2.
inline Cplx binom2(Cplx z) { return z * (z - 1.0) / 2.0; }
inline long binom2_int(long n) { return n * (n - 1) / 2; }

/// |a-b| / max(|a|, |b|); zero when both vanish.
inline double rel_residual(Cplx a, Cplx b) {
    double m = std::max(std::abs(a), std::abs(b));
    return m == 0.0 ? 0.0 : std::abs(a - b) / m;
}

/// Numeric evaluation point: fixed (s,t), the roots phi, phi' of
/// x^2 - s x - t, and their ratio q = phi'/phi. Immutable after construction.
struct EvalContext {
    double s = 0.0;
    double t = 0.0;
    bool degenerate = false; // |s^2 + 4t| <= 1e-12 (double root phi = phi' = s/2)
    Cplx phi, phi_prime, q;
    double tol = 1e-9;

    EvalContext(double s_, double t_, double tol_ = 1e-9) : s(s_), t(t_), tol(tol_) {
        if (!std::isfinite(s) || !std::isfinite(t))
            throw ParameterError("EvalContext: parameters must be finite");
        if (s == 0.0 || t == 0.0)
            throw ParameterError("EvalContext: s and t must be nonzero");
        double disc = s * s + 4.0 * t;
        degenerate = std::abs(disc) <= 1e-12;
        if (degenerate) {
            phi = phi_prime = Cplx(s / 2.0, 0.0);
        } else {
            Cplx root = std::sqrt(Cplx(disc, 0.0));
            phi = (Cplx(s, 0.0) + root) / 2.0;
            phi_prime = Cplx(s, 0.0) - phi;
        }
        q = phi_prime / phi;
    }

    /// True when phi > phi' > 0 (t < 0, s > 0, positive discriminant), the
    /// regime in which all non-integer powers of phi, phi' and -t are
    /// unambiguous real principal powers.
    bool branch_safe() const {
        return !degenerate && t < 0.0 && s > 0.0 && s * s + 4.0 * t > 0.0;
    }
};

/// Comparison at the context's tolerance (relative, default 1e-9).
inline bool approx_equal(Cplx a, Cplx b, const EvalContext& ctx) {
    return rel_residual(a, b) <= ctx.tol;
}

} // namespace stcalc
