#pragma once

#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <string>

#include "stcalc/rational.hpp"

namespace stcalc {

/// Exponent pair of one term c * s^s_exp * t^t_exp. s_exp >= 0; t_exp may be
/// negative (t is invertible in the ring). Map order = lexicographic (s, t),
/// which is also the canonical serialization order.
struct Monomial {
    int s_exp = 0;
    int t_exp = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Bivariate Laurent polynomial: finitely supported map Monomial -> Rational
/// over Q[s, t, 1/t]. No zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c) { if (!c.is_zero()) terms_[{0, 0}] = c; }
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(int s_exp, int t_exp, const Rational& c = Rational(1));
    static LaurentPoly var_s() { return monomial(1, 0); }
    static LaurentPoly var_t() { return monomial(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Rational constant_value() const;

    /// Max s-exponent; requires a nonzero polynomial.
    int deg_s() const;
    int min_t() const;
    int max_t() const;
    std::size_t term_count() const { return terms_.size(); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coeff(int s_exp, int t_exp) const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& b) { *this = *this + b; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& b) { *this = *this - b; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& b) { *this = *this * b; return *this; }
    friend LaurentPoly operator*(const LaurentPoly& a, const Rational& c);
    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a) { return a * c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly pow(int e) const; // e >= 0

    /// s -> a*s, t -> a^2*t (each term picks up a^(s_exp + 2*t_exp)).
    LaurentPoly scale_st(const Rational& a) const;
    /// s -> a*s.
    LaurentPoly scale_s(const Rational& a) const;
    /// Substitute a numeric value for t; result is a polynomial in s only.
    LaurentPoly eval_t(const Rational& t0) const;

    Rational eval(const Rational& s0, const Rational& t0) const;
    double eval(double s0, double t0) const;
    std::complex<double> eval(std::complex<double> s0, std::complex<double> t0) const;

    /// Human-readable form, descending s powers ("s^4+3s^2t+2t^2").
    std::string display() const;

private:
    void add_term_(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

/// Exact quotient p/q in Q[s, t, 1/t], or nullopt when q does not divide p.
std::optional<LaurentPoly> exact_div_opt(const LaurentPoly& p, const LaurentPoly& q);

/// Exact quotient; throws DivisibilityError when q does not divide p.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

} // namespace stcalc
