#include "stcalc/laurent.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace stcalc {

LaurentPoly LaurentPoly::monomial(int s_exp, int t_exp, const Rational& c) {
    LaurentPoly p;
    if (s_exp < 0) throw ParameterError("LaurentPoly: negative s exponent");
    if (!c.is_zero()) p.terms_[{s_exp, t_exp}] = c;
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational LaurentPoly::constant_value() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Rational() : it->second;
}

int LaurentPoly::deg_s() const {
    if (terms_.empty()) throw ParameterError("LaurentPoly::deg_s on zero polynomial");
    return terms_.rbegin()->first.s_exp;
}

int LaurentPoly::min_t() const {
    if (terms_.empty()) throw ParameterError("LaurentPoly::min_t on zero polynomial");
    int m = terms_.begin()->first.t_exp;
    for (const auto& [mono, c] : terms_) m = std::min(m, mono.t_exp);
    return m;
}

int LaurentPoly::max_t() const {
    if (terms_.empty()) throw ParameterError("LaurentPoly::max_t on zero polynomial");
    int m = terms_.begin()->first.t_exp;
    for (const auto& [mono, c] : terms_) m = std::max(m, mono.t_exp);
    return m;
}

Rational LaurentPoly::coeff(int s_exp, int t_exp) const {
    auto it = terms_.find({s_exp, t_exp});
    return it == terms_.end() ? Rational() : it->second;
}

void LaurentPoly::add_term_(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term_(m, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term_(m, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term_({ma.s_exp + mb.s_exp, ma.t_exp + mb.t_exp}, ca * cb);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const Rational& c) {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : a.terms_) r.terms_[m] = cc * c;
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) throw ParameterError("LaurentPoly::pow: negative exponent");
    LaurentPoly r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::scale_st(const Rational& a) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_)
        r.add_term_(m, c * a.pow_int(m.s_exp + 2L * m.t_exp));
    return r;
}

LaurentPoly LaurentPoly::scale_s(const Rational& a) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_)
        r.add_term_(m, c * a.pow_int(m.s_exp));
    return r;
}

LaurentPoly LaurentPoly::eval_t(const Rational& t0) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_)
        r.add_term_({m.s_exp, 0}, c * t0.pow_int(m.t_exp));
    return r;
}

Rational LaurentPoly::eval(const Rational& s0, const Rational& t0) const {
    Rational acc;
    for (const auto& [m, c] : terms_)
        acc += c * s0.pow_int(m.s_exp) * t0.pow_int(m.t_exp);
    return acc;
}

double LaurentPoly::eval(double s0, double t0) const {
    // Exact rational evaluation (a double is a rational), then one rounding.
    // Direct double accumulation cancels catastrophically for the larger
    // fibonomials, whose terms dwarf their sum.
    return eval(Rational::from_double(s0), Rational::from_double(t0)).to_double();
}

std::complex<double> LaurentPoly::eval(std::complex<double> s0, std::complex<double> t0) const {
    auto cpow = [](std::complex<double> z, int e) {
        std::complex<double> r(1.0, 0.0);
        bool inv = e < 0;
        unsigned k = static_cast<unsigned>(inv ? -e : e);
        std::complex<double> b = z;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return inv ? 1.0 / r : r;
    };
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [m, c] : terms_)
        acc += c.to_double() * cpow(s0, m.s_exp) * cpow(t0, m.t_exp);
    return acc;
}

std::string LaurentPoly::display() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending (s, t) order reads like the usual tables.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? "-" : "+");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_vars = (m.s_exp != 0 || m.t_exp != 0);
        if (!a.is_one() || !has_vars) os << a.display();
        if (m.s_exp != 0) {
            os << "s";
            if (m.s_exp != 1) os << "^" << m.s_exp;
        }
        if (m.t_exp != 0) {
            os << "t";
            if (m.t_exp != 1) os << "^" << m.t_exp;
        }
    }
    return os.str();
}

namespace {

// Univariate Laurent polynomial in t, as (offset, dense coefficient vector)
// with nonzero first entry: value = t^offset * sum coef[i] t^i.
struct TProfile {
    int offset = 0;
    std::vector<Rational> coef;
};

TProfile t_profile(const std::map<Monomial, Rational>& terms, int s_exp) {
    int lo = 0, hi = 0;
    bool seen = false;
    for (const auto& [m, c] : terms) {
        if (m.s_exp != s_exp) continue;
        if (!seen) { lo = hi = m.t_exp; seen = true; }
        lo = std::min(lo, m.t_exp);
        hi = std::max(hi, m.t_exp);
    }
    TProfile p;
    if (!seen) return p;
    p.offset = lo;
    p.coef.assign(static_cast<std::size_t>(hi - lo + 1), Rational());
    for (const auto& [m, c] : terms)
        if (m.s_exp == s_exp) p.coef[static_cast<std::size_t>(m.t_exp - lo)] = c;
    return p;
}

// Exact division in Q[t, 1/t]: strip the t-offsets, then ordinary long
// division in Q[t]; a nonzero remainder means "not divisible".
std::optional<TProfile> t_div(const TProfile& a, const TProfile& b) {
    if (b.coef.empty()) throw ParameterError("laurent t_div: division by zero");
    if (a.coef.empty()) return TProfile{};
    std::vector<Rational> rem = a.coef;
    const std::vector<Rational>& den = b.coef;
    if (rem.size() < den.size()) return std::nullopt;
    std::vector<Rational> quot(rem.size() - den.size() + 1, Rational());
    const Rational& lead = den.back();
    for (std::size_t i = rem.size(); i-- >= den.size();) {
        Rational q = rem[i] / lead;
        quot[i - (den.size() - 1)] = q;
        if (!q.is_zero())
            for (std::size_t j = 0; j < den.size(); ++j)
                rem[i - (den.size() - 1) + j] -= q * den[j];
        if (i == 0) break;
    }
    for (std::size_t j = 0; j + 1 < den.size() && j < rem.size(); ++j)
        if (!rem[j].is_zero()) return std::nullopt;
    TProfile r;
    r.offset = a.offset - b.offset;
    r.coef = std::move(quot);
    while (!r.coef.empty() && r.coef.back().is_zero()) r.coef.pop_back();
    // Leading (trailing-offset) zeros only shift the offset.
    std::size_t skip = 0;
    while (skip < r.coef.size() && r.coef[skip].is_zero()) ++skip;
    if (skip) {
        r.coef.erase(r.coef.begin(), r.coef.begin() + static_cast<long>(skip));
        r.offset += static_cast<int>(skip);
    }
    return r;
}

LaurentPoly from_profile(const TProfile& p, int s_exp) {
    LaurentPoly r;
    for (std::size_t i = 0; i < p.coef.size(); ++i)
        if (!p.coef[i].is_zero())
            r += LaurentPoly::monomial(s_exp, p.offset + static_cast<int>(i), p.coef[i]);
    return r;
}

} // namespace

std::optional<LaurentPoly> exact_div_opt(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw ParameterError("exact_div: division by zero polynomial");
    if (p.is_zero()) return LaurentPoly();
    // Long division in (Q[t,1/t])[s]: the s-degree strictly decreases, and each
    // leading-coefficient division must be exact in Q[t,1/t].
    const int dq = q.deg_s();
    TProfile lead_q = t_profile(q.terms(), dq);
    LaurentPoly rem = p, quot;
    while (!rem.is_zero()) {
        int dr = rem.deg_s();
        if (dr < dq) return std::nullopt;
        TProfile lead_r = t_profile(rem.terms(), dr);
        auto c = t_div(lead_r, lead_q);
        if (!c) return std::nullopt;
        LaurentPoly term = from_profile(*c, dr - dq);
        quot += term;
        rem -= term * q;
    }
    return quot;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    auto r = exact_div_opt(p, q);
    if (!r)
        throw DivisibilityError("exact_div: " + q.display() + " does not divide " + p.display());
    return *r;
}

} // namespace stcalc
