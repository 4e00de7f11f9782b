#include "stcalc/fib_kernel.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "stcalc/quadext.hpp"

namespace stcalc {

namespace {

// Memo caches are append-only and mutex-guarded; results are copied out so
// callers never hold references into a growing vector.
LaurentPoly fib_nonneg(long n) {
    static std::mutex mu;
    static std::vector<LaurentPoly> cache{LaurentPoly(0), LaurentPoly(1)};
    std::lock_guard<std::mutex> lock(mu);
    static const LaurentPoly s = LaurentPoly::var_s();
    static const LaurentPoly t = LaurentPoly::var_t();
    while (static_cast<long>(cache.size()) <= n) {
        std::size_t k = cache.size();
        cache.push_back(s * cache[k - 1] + t * cache[k - 2]);
    }
    return cache[static_cast<std::size_t>(n)];
}

} // namespace

LaurentPoly fib_poly(long n) {
    if (n >= 0) return fib_nonneg(n);
    // {-m} = -(-t)^{-m} {m}  ->  coefficient (-1)^{n+1} on t^n {−n}.
    long m = -n;
    Rational sign((m % 2 == 0) ? -1 : 1); // (-1)^{n+1} with n = -m
    return LaurentPoly::monomial(0, static_cast<int>(n), sign) * fib_nonneg(m);
}

LaurentPoly lucas_poly(long n) {
    if (n < 0) throw UnsupportedIndexError("lucas_poly: negative index unsupported");
    static std::mutex mu;
    static std::vector<LaurentPoly> cache{LaurentPoly(2), LaurentPoly::var_s()};
    std::lock_guard<std::mutex> lock(mu);
    static const LaurentPoly s = LaurentPoly::var_s();
    static const LaurentPoly t = LaurentPoly::var_t();
    while (static_cast<long>(cache.size()) <= n) {
        std::size_t k = cache.size();
        cache.push_back(s * cache[k - 1] + t * cache[k - 2]);
    }
    return cache[static_cast<std::size_t>(n)];
}

LaurentPoly fibotorial(long n) {
    if (n < 0) throw UnsupportedIndexError("fibotorial: negative index");
    static std::mutex mu;
    static std::vector<LaurentPoly> cache{LaurentPoly(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(cache.size()) <= n) {
        std::size_t k = cache.size();
        cache.push_back(cache[k - 1] * fib_poly(static_cast<long>(k)));
    }
    return cache[static_cast<std::size_t>(n)];
}

LaurentPoly fibonomial(long n, long k) {
    if (n < 0) throw UnsupportedIndexError("fibonomial: negative n");
    if (k < 0 || k > n) return LaurentPoly(0);
    static std::mutex mu;
    static std::map<std::pair<long, long>, LaurentPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, k});
        if (it != cache.end()) return it->second;
    }
    // Accumulate {n-k+j choose j} = {n-k+j-1 choose j-1} * {n-k+j} / {j};
    // every intermediate is a fibonomial, so each division is exact.
    LaurentPoly acc(1);
    for (long j = 1; j <= k; ++j)
        acc = exact_div(acc * fib_poly(n - k + j), fib_poly(j));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(n, k), acc);
    return acc;
}

std::pair<Rational, Rational> Specialization::st() const {
    switch (tag) {
        case SpecTag::naturals:          return {Rational(2), Rational(-1)};
        case SpecTag::fibonacci:         return {Rational(1), Rational(1)};
        case SpecTag::pell:              return {Rational(2), Rational(1)};
        case SpecTag::jacobsthal:        return {Rational(1), Rational(2)};
        case SpecTag::pq_numbers:        return {p + q, -(p * q)};
        case SpecTag::chebyshev_u:       return {Rational(2) * p, Rational(-1)};
        case SpecTag::mersenne:          return {Rational(3), Rational(-2)};
        case SpecTag::pq_lucas_sequence: return {p, -q};
        case SpecTag::fibonacci_polys:   return {p, Rational(1)};
    }
    throw ParameterError("Specialization: unknown tag");
}

Rational specialize_fib(const Specialization& kind, long n) {
    if (n < 0) throw UnsupportedIndexError("specialize_fib: negative index");
    auto [s, t] = kind.st();
    return fib_poly(n).eval(s, t);
}

Rational specialize_lucas(const Specialization& kind, long n) {
    if (n < 0) throw UnsupportedIndexError("specialize_lucas: negative index");
    auto [s, t] = kind.st();
    return lucas_poly(n).eval(s, t);
}

LaurentPoly chebyshev_u_poly(long n) {
    return fib_poly(n).eval_t(Rational(-1)).scale_s(Rational(2));
}

LaurentPoly fibonacci_poly_x(long n) {
    return fib_poly(n).eval_t(Rational(1));
}

bool verify_pascal(long n, long k) {
    if (n < 1 || k < 1 || k > n - 1)
        throw ParameterError("verify_pascal: need n >= 1 and 1 <= k <= n-1");
    QuadExt lhs(fibonomial(n + 1, k));
    QuadExt cnk(fibonomial(n, k));
    QuadExt cnk1(fibonomial(n, k - 1));
    QuadExt phi_k = QuadExt::phi_power(k);
    QuadExt phip_rest = QuadExt::phi_prime_power(n + 1 - k);
    QuadExt phip_k = QuadExt::phi_prime_power(k);
    QuadExt phi_rest = QuadExt::phi_power(n + 1 - k);
    QuadExt rhs1 = phi_k * cnk + phip_rest * cnk1;
    QuadExt rhs2 = phip_k * cnk + phi_rest * cnk1;
    return rhs1 == lhs && rhs2 == lhs;
}

} // namespace stcalc
