#include "stcalc/deformed_symbolic.hpp"

#include "stcalc/eval_context.hpp"
#include "stcalc/fib_kernel.hpp"

namespace stcalc {

void DeformedSymbolic::add_term(const DeformedKey& key, const QuadExt& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QuadExt DeformedSymbolic::coeff(const DeformedKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? QuadExt(0) : it->second;
}

DeformedSymbolic operator+(const DeformedSymbolic& a, const DeformedSymbolic& b) {
    DeformedSymbolic r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

DeformedSymbolic DeformedSymbolic::shifted(const DeformedKey& m, const QuadExt& coef) const {
    DeformedSymbolic r;
    for (const auto& [k, c] : terms_)
        r.add_term({k.x_exp + m.x_exp, k.y_exp + m.y_exp, k.u_exp + m.u_exp, k.v_exp + m.v_exp},
                   c * coef);
    return r;
}

bool operator==(const DeformedSymbolic& a, const DeformedSymbolic& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [k, c] : a.terms_) {
        auto it = b.terms_.find(k);
        if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
}

DeformedSymbolic deformed_power_symbolic(int n, const DeformedArg& A, const DeformedArg& B,
                                         bool uv_swapped) {
    if (n < 0) throw UnsupportedIndexError("deformed_power_symbolic: n must be >= 0");
    DeformedSymbolic r;
    for (int k = 0; k <= n; ++k) {
        DeformedKey key;
        key.x_exp = (n - k) * A.mono.x_exp + k * B.mono.x_exp;
        key.y_exp = (n - k) * A.mono.y_exp + k * B.mono.y_exp;
        key.u_exp = (n - k) * A.mono.u_exp + k * B.mono.u_exp;
        key.v_exp = (n - k) * A.mono.v_exp + k * B.mono.v_exp;
        int cu = static_cast<int>(binom2_int(n - k));
        int cv = static_cast<int>(binom2_int(k));
        if (uv_swapped) {
            key.v_exp += cu;
            key.u_exp += cv;
        } else {
            key.u_exp += cu;
            key.v_exp += cv;
        }
        QuadExt coef = QuadExt(fibonomial(n, k)) * A.coef.pow(n - k) * B.coef.pow(k);
        r.add_term(key, coef);
    }
    return r;
}

DeformedSymbolic deformed_power_symbolic(int n) {
    return deformed_power_symbolic(n, {{1, 0, 0, 0}, QuadExt(1)}, {{0, 1, 0, 0}, QuadExt(1)});
}

bool check_add_shift_symbolic(int n, int variant) {
    if (variant != 1 && variant != 2)
        throw ParameterError("check_add_shift_symbolic: variant must be 1 or 2");
    const QuadExt phi = QuadExt::phi();
    const QuadExt phip = QuadExt::phi_prime();
    const QuadExt& inner1 = (variant == 1) ? phi : phip;
    const QuadExt& inner2 = (variant == 1) ? phip : phi;
    DeformedSymbolic lhs = deformed_power_symbolic(n + 1);
    // x * (u x (+) inner1 y)^(n) + y * (inner2 x (+) v y)^(n)
    DeformedSymbolic t1 =
        deformed_power_symbolic(n, {{1, 0, 1, 0}, QuadExt(1)}, {{0, 1, 0, 0}, inner1})
            .shifted({1, 0, 0, 0}, QuadExt(1));
    DeformedSymbolic t2 =
        deformed_power_symbolic(n, {{1, 0, 0, 0}, inner2}, {{0, 1, 0, 1}, QuadExt(1)})
            .shifted({0, 1, 0, 0}, QuadExt(1));
    return lhs == t1 + t2;
}

bool check_homogeneity_symbolic(int n, const Rational& z) {
    QuadExt zc{LaurentPoly(z)};
    DeformedSymbolic lhs = deformed_power_symbolic(n).shifted({0, 0, 0, 0}, zc.pow(n));
    DeformedSymbolic rhs =
        deformed_power_symbolic(n, {{1, 0, 0, 0}, zc}, {{0, 1, 0, 0}, zc});
    return lhs == rhs;
}

bool check_rescale_symbolic(int n, const Rational& a) {
    // (x (+)_{au,av} y)_{as,a^2 t}^(n): fibonomials pick up s -> a s, t -> a^2 t,
    // and each (au)^i (av)^j contributes a^(i+j) on top of the u^i v^j monomial.
    DeformedSymbolic lhs;
    for (int k = 0; k <= n; ++k) {
        Rational scale = a.pow_int(binom2_int(n - k) + binom2_int(k));
        LaurentPoly coef = fibonomial(n, k).scale_st(a) * scale;
        lhs.add_term({n - k, k, static_cast<int>(binom2_int(n - k)), static_cast<int>(binom2_int(k))},
                     QuadExt(coef));
    }
    Rational an2 = a.pow_int(binom2_int(n));
    DeformedSymbolic rhs = deformed_power_symbolic(n).shifted({0, 0, 0, 0}, QuadExt(LaurentPoly(an2)));
    return lhs == rhs;
}

bool check_swap_symbolic(int n) {
    DeformedSymbolic lhs = deformed_power_symbolic(n);
    DeformedSymbolic rhs =
        deformed_power_symbolic(n, {{0, 1, 0, 0}, QuadExt(1)}, {{1, 0, 0, 0}, QuadExt(1)},
                                /*uv_swapped=*/true);
    return lhs == rhs;
}

bool check_edge_symbolic(int n) {
    DeformedSymbolic y0 =
        deformed_power_symbolic(n, {{1, 0, 0, 0}, QuadExt(1)}, {{0, 1, 0, 0}, QuadExt(0)});
    DeformedSymbolic y0_expect;
    y0_expect.add_term({n, 0, static_cast<int>(binom2_int(n)), 0}, QuadExt(1));
    DeformedSymbolic x0 =
        deformed_power_symbolic(n, {{1, 0, 0, 0}, QuadExt(0)}, {{0, 1, 0, 0}, QuadExt(1)});
    DeformedSymbolic x0_expect;
    x0_expect.add_term({0, n, 0, static_cast<int>(binom2_int(n))}, QuadExt(1));
    return y0 == y0_expect && x0 == x0_expect;
}

} // namespace stcalc
