#pragma once

#include <vector>

#include "stcalc/errors.hpp"

namespace stcalc {

/// Formal power series truncated at a fixed order N: coefficients c0..cN over
/// any scalar ring (complex doubles for numeric work, LaurentPoly for exact
/// work). All arithmetic truncates consistently at the smaller order.
template <class S>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw ParameterError("TruncatedSeries: negative order");
    }
    explicit TruncatedSeries(std::vector<S> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw ParameterError("TruncatedSeries: empty coefficient list");
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const S& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
    S& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
    const std::vector<S>& coeffs() const { return c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r[n] = a[n] + b[n];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r[n] = a[n] - b[n];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n)
            for (int i = 0; i <= n; ++i) r[n] = r[n] + a[i] * b[n - i];
        return r;
    }
    friend TruncatedSeries operator*(const S& c, const TruncatedSeries& a) {
        TruncatedSeries r(a.order());
        for (int n = 0; n <= a.order(); ++n) r[n] = c * a[n];
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

    /// x -> lambda * x.
    TruncatedSeries scale_arg(const S& lambda) const {
        TruncatedSeries r(order());
        S p = lambda; // lambda^n built incrementally
        r[0] = c_[0];
        for (int n = 1; n <= order(); ++n) {
            r[n] = p * c_[static_cast<std::size_t>(n)];
            p = p * lambda;
        }
        return r;
    }

    /// Horner evaluation of the truncated polynomial.
    S eval(const S& x) const {
        S acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

private:
    std::vector<S> c_;
};

} // namespace stcalc
