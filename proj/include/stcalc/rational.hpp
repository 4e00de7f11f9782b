#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

#include "stcalc/errors.hpp"

namespace stcalc {

/// Arbitrary-precision rational. Invariants: gcd(|num|, den) = 1, den > 0,
/// zero is 0/1. All arithmetic is exact; results stay canonical.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(mpz_class(n)) {}
    Rational(long long n) : v_(mpz_class(static_cast<long>(n))) {}
    Rational(long num, long den) : v_(mpz_class(num), mpz_class(den)) { canon_(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { canon_(); }

    /// Exact rational value of a finite double.
    static Rational from_double(double x) {
        if (!std::isfinite(x)) throw ParameterError("Rational::from_double: non-finite value");
        Rational r;
        r.v_ = mpq_class(x);
        return r;
    }

    /// Parses "num" or "num/den" in base 10.
    static Rational from_string(std::string_view sv) {
        auto pos = sv.find('/');
        if (pos == std::string_view::npos)
            return Rational(mpz_class(std::string(sv)));
        return Rational(mpz_class(std::string(sv.substr(0, pos))),
                        mpz_class(std::string(sv.substr(pos + 1))));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    double to_double() const { return v_.get_d(); }

    /// Canonical textual form "num/den" (always with the denominator).
    std::string str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }
    /// Display form: omits a unit denominator.
    std::string display() const {
        if (is_integer()) return v_.get_num().get_str();
        return str();
    }

    Rational pow_int(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw ParameterError("Rational::pow_int: 0 to a negative power");
            return Rational();
        }
        mpz_class n, d;
        unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ae);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ae);
        return e > 0 ? Rational(n, d) : Rational(d, n);
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw ParameterError("Rational: division by zero");
        return Rational(a.v_ / b.v_);
    }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    void canon_() {
        if (v_.get_den() == 0) throw ParameterError("Rational: zero denominator");
        v_.canonicalize();
    }
    mpq_class v_; // canonical: arithmetic on canonical mpq stays canonical
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace stcalc
