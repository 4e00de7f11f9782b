#pragma once

#include <compare>
#include <map>

#include "stcalc/quadext.hpp"

namespace stcalc {

/// Monomial x^a y^b u^c v^d attached to one term of a symbolic deformed power.
struct DeformedKey {
    int x_exp = 0;
    int y_exp = 0;
    int u_exp = 0;
    int v_exp = 0;
    friend auto operator<=>(const DeformedKey&, const DeformedKey&) = default;
};

/// Exact expansion of a deformed power: map from (x,y,u,v)-monomials to
/// coefficients in the quadratic extension of the (s,t) function field.
/// This is the ring in which the addition-shift identities cancel exactly.
class DeformedSymbolic {
public:
    DeformedSymbolic() = default;

    void add_term(const DeformedKey& key, const QuadExt& coef);
    const std::map<DeformedKey, QuadExt>& terms() const { return terms_; }
    QuadExt coeff(const DeformedKey& key) const;

    friend DeformedSymbolic operator+(const DeformedSymbolic& a, const DeformedSymbolic& b);
    /// Multiply every term by monomial * coef.
    DeformedSymbolic shifted(const DeformedKey& monomial, const QuadExt& coef) const;

    friend bool operator==(const DeformedSymbolic& a, const DeformedSymbolic& b);

private:
    std::map<DeformedKey, QuadExt> terms_;
};

/// One formal argument of a deformed power: a monomial in (x,y,u,v) scaled by
/// a quadratic-extension coefficient (e.g. "u x" or "phi y").
struct DeformedArg {
    DeformedKey mono;
    QuadExt coef{1};
};

/// (A (+)_{u,v} B)^(n) = sum_k {n choose k} u^C(n-k,2) v^C(k,2) A^(n-k) B^k,
/// expanded exactly. With uv_swapped the u/v exponent slots trade places
/// (the (+)_{v,u} power).
DeformedSymbolic deformed_power_symbolic(int n, const DeformedArg& A, const DeformedArg& B,
                                         bool uv_swapped = false);

/// (x (+)_{u,v} y)^(n) in the plain arguments.
DeformedSymbolic deformed_power_symbolic(int n);

// Exact checks of the Theorem properties for integer exponents.
bool check_add_shift_symbolic(int n, int variant);              // properties 1, 2
bool check_homogeneity_symbolic(int n, const Rational& z);      // property 3
bool check_rescale_symbolic(int n, const Rational& a);          // property 4
bool check_swap_symbolic(int n);                                // property 5
bool check_edge_symbolic(int n);                                // properties 6, 7

} // namespace stcalc
