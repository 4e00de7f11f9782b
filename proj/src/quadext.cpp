#include "stcalc/quadext.hpp"

namespace stcalc {

LaurentRatio::LaurentRatio(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ParameterError("LaurentRatio: zero denominator");
    reduce_();
}

void LaurentRatio::reduce_() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.is_constant()) {
        Rational c = den_.constant_value();
        if (!c.is_one()) num_ = num_ * (Rational(1) / c);
        den_ = LaurentPoly(1);
        return;
    }
    if (auto q = exact_div_opt(num_, den_)) {
        num_ = *q;
        den_ = LaurentPoly(1);
    }
}

LaurentRatio LaurentRatio::operator-() const {
    LaurentRatio r = *this;
    r.num_ = -r.num_;
    return r;
}

LaurentRatio operator+(const LaurentRatio& a, const LaurentRatio& b) {
    return LaurentRatio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentRatio operator-(const LaurentRatio& a, const LaurentRatio& b) {
    return LaurentRatio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

LaurentRatio operator*(const LaurentRatio& a, const LaurentRatio& b) {
    return LaurentRatio(a.num_ * b.num_, a.den_ * b.den_);
}

LaurentRatio operator/(const LaurentRatio& a, const LaurentRatio& b) {
    if (b.is_zero()) throw ParameterError("LaurentRatio: division by zero");
    return LaurentRatio(a.num_ * b.den_, a.den_ * b.num_);
}

std::string LaurentRatio::display() const {
    if (is_polynomial()) return num_.display();
    return "(" + num_.display() + ")/(" + den_.display() + ")";
}

QuadExt conj(const QuadExt& x) {
    return QuadExt(x.a_ + LaurentRatio(LaurentPoly::var_s()) * x.b_, -x.b_);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    // (a1 + b1 phi)(a2 + b2 phi), phi^2 = s phi + t
    static const LaurentRatio s_r(LaurentPoly::var_s());
    static const LaurentRatio t_r(LaurentPoly::var_t());
    LaurentRatio bb = x.b_ * y.b_;
    return QuadExt(x.a_ * y.a_ + t_r * bb,
                   x.a_ * y.b_ + y.a_ * x.b_ + s_r * bb);
}

QuadExt QuadExt::phi_power(long n) {
    if (n < 0) throw UnsupportedIndexError("QuadExt::phi_power: negative exponent");
    QuadExt r(1);
    QuadExt p = phi();
    for (long i = 0; i < n; ++i) r *= p;
    return r;
}

QuadExt QuadExt::pow(int e) const {
    if (e < 0) throw UnsupportedIndexError("QuadExt::pow: negative exponent");
    QuadExt r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string QuadExt::display() const {
    return "(" + a_.display() + ") + (" + b_.display() + ")*phi";
}

} // namespace stcalc
