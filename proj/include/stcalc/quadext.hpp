#pragma once

#include "stcalc/laurent.hpp"

namespace stcalc {

/// Ratio of two Laurent polynomials. Fractions are reduced opportunistically
/// (constant denominators are folded in; exact quotients are taken when they
/// exist); equality is by cross-multiplication, so no canonical gcd is needed.
class LaurentRatio {
public:
    LaurentRatio() : num_(), den_(1) {}
    LaurentRatio(const LaurentPoly& p) : num_(p), den_(1) {}
    LaurentRatio(const Rational& c) : num_(c), den_(1) {}
    LaurentRatio(long c) : num_(c), den_(1) {}
    LaurentRatio(int c) : num_(c), den_(1) {}
    LaurentRatio(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// True when the value is a polynomial (denominator reduced to 1).
    bool is_polynomial() const { return den_ == LaurentPoly(1); }

    LaurentRatio operator-() const;
    friend LaurentRatio operator+(const LaurentRatio& a, const LaurentRatio& b);
    friend LaurentRatio operator-(const LaurentRatio& a, const LaurentRatio& b);
    friend LaurentRatio operator*(const LaurentRatio& a, const LaurentRatio& b);
    friend LaurentRatio operator/(const LaurentRatio& a, const LaurentRatio& b);
    LaurentRatio& operator+=(const LaurentRatio& b) { *this = *this + b; return *this; }
    LaurentRatio& operator-=(const LaurentRatio& b) { *this = *this - b; return *this; }
    LaurentRatio& operator*=(const LaurentRatio& b) { *this = *this * b; return *this; }

    friend bool operator==(const LaurentRatio& a, const LaurentRatio& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const LaurentRatio& a, const LaurentRatio& b) { return !(a == b); }

    std::string display() const;

private:
    void reduce_();
    LaurentPoly num_, den_;
};

/// Element a + b*phi of the rank-2 extension of the (s,t) function field by
/// the root phi of x^2 - s x - t. Products are always reduced by
/// phi^2 = s*phi + t, so the (a, b) representation is unique.
class QuadExt {
public:
    QuadExt() : a_(), b_() {}
    QuadExt(LaurentRatio a, LaurentRatio b) : a_(std::move(a)), b_(std::move(b)) {}
    QuadExt(const LaurentPoly& scalar) : a_(scalar), b_() {}
    QuadExt(const Rational& scalar) : a_(scalar), b_() {}
    QuadExt(long scalar) : a_(Rational(scalar)), b_() {}
    QuadExt(int scalar) : a_(Rational(scalar)), b_() {}

    static QuadExt phi() { return QuadExt(LaurentRatio(), LaurentRatio(Rational(1))); }
    /// phi' = s - phi, the conjugate root.
    static QuadExt phi_prime() { return conj(phi()); }
    /// phi^n for n >= 0, reduced to (t*{n-1}, {n}).
    static QuadExt phi_power(long n);
    static QuadExt phi_prime_power(long n) { return conj(phi_power(n)); }

    const LaurentRatio& scalar_part() const { return a_; }
    const LaurentRatio& phi_part() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Conjugation (a, b) -> (a + s b, -b); a ring homomorphism.
    friend QuadExt conj(const QuadExt& x);

    QuadExt operator-() const { return QuadExt(-a_, -b_); }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    QuadExt& operator+=(const QuadExt& y) { *this = *this + y; return *this; }
    QuadExt& operator-=(const QuadExt& y) { *this = *this - y; return *this; }
    QuadExt& operator*=(const QuadExt& y) { *this = *this * y; return *this; }

    QuadExt pow(int e) const; // e >= 0

    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string display() const;

private:
    LaurentRatio a_, b_;
};

} // namespace stcalc
