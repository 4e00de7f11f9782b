#pragma once

#include <utility>

#include "stcalc/laurent.hpp"

namespace stcalc {

/// (s,t)-Fibonacci polynomial {n}: {0}=0, {1}=1, {n+2} = s{n+1} + t{n}.
/// Negative indices follow {-n} = -(-t)^{-n} {n} and live in the Laurent ring.
LaurentPoly fib_poly(long n);

/// (s,t)-Lucas polynomial <n>: <0>=2, <1>=s, same recurrence. n >= 0 only.
LaurentPoly lucas_poly(long n);

/// Fibotorial {n}! = {1}{2}...{n} (empty product = 1). n >= 0.
LaurentPoly fibotorial(long n);

/// Fibonomial coefficient {n}!/({k}!{n-k}!), computed by accumulating exact
/// divisions so any algebra bug trips a DivisibilityError. Zero outside
/// 0 <= k <= n.
LaurentPoly fibonomial(long n, long k);

enum class SpecTag {
    naturals,          // (2, -1)
    fibonacci,         // (1, 1)
    pell,              // (2, 1)
    jacobsthal,        // (1, 2)
    pq_numbers,        // (p+q, -pq)
    chebyshev_u,       // (2*t0, -1)
    mersenne,          // (3, -2)
    pq_lucas_sequence, // (P, -Q)
    fibonacci_polys    // (x0, 1)
};

/// One of the named specializations of the (s,t) parameters.
struct Specialization {
    SpecTag tag;
    Rational p, q; // pq_numbers/pq_lucas parameters; p doubles as t0/x0

    static Specialization naturals() { return {SpecTag::naturals, {}, {}}; }
    static Specialization fibonacci() { return {SpecTag::fibonacci, {}, {}}; }
    static Specialization pell() { return {SpecTag::pell, {}, {}}; }
    static Specialization jacobsthal() { return {SpecTag::jacobsthal, {}, {}}; }
    static Specialization pq_numbers(Rational p, Rational q) { return {SpecTag::pq_numbers, std::move(p), std::move(q)}; }
    static Specialization chebyshev_u(Rational t0) { return {SpecTag::chebyshev_u, std::move(t0), {}}; }
    static Specialization mersenne() { return {SpecTag::mersenne, {}, {}}; }
    static Specialization pq_lucas_sequence(Rational P, Rational Q) { return {SpecTag::pq_lucas_sequence, std::move(P), std::move(Q)}; }
    static Specialization fibonacci_polys(Rational x0) { return {SpecTag::fibonacci_polys, std::move(x0), {}}; }

    std::pair<Rational, Rational> st() const;
};

/// {n} / <n> evaluated at the tag's (s,t). n >= 0.
Rational specialize_fib(const Specialization& kind, long n);
Rational specialize_lucas(const Specialization& kind, long n);

/// {n}_{2x,-1} = U_{n-1}(x) as a polynomial in x (stored in the s slot).
LaurentPoly chebyshev_u_poly(long n);
/// {n}_{x,1}, the classical Fibonacci polynomial in x.
LaurentPoly fibonacci_poly_x(long n);

/// Checks both quadratic-extension Pascal recurrences for {n+1 choose k}
/// exactly: the phi components must cancel and the scalar part must equal
/// fibonomial(n+1, k). Requires n >= 1, 1 <= k <= n-1.
bool verify_pascal(long n, long k);

} // namespace stcalc
