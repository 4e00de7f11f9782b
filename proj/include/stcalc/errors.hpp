#pragma once

#include <stdexcept>
#include <string>

namespace stcalc {

/// Exact division failed. In identity-driven code paths (fibonomials,
/// Catalan polynomials) this signals an algebra bug, never bad input.
class DivisibilityError : public std::runtime_error {
public:
    explicit DivisibilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested index is outside the defined range of the sequence.
class UnsupportedIndexError : public std::domain_error {
public:
    explicit UnsupportedIndexError(const std::string& what) : std::domain_error(what) {}
};

/// A denominator value vanished (within tolerance) at the given numeric (s,t).
class SingularParameterError : public std::domain_error {
public:
    explicit SingularParameterError(const std::string& what) : std::domain_error(what) {}
};

/// Parameter regime excluded by the underlying convergence theorem (|q| = 1).
class UnsupportedRegimeError : public std::domain_error {
public:
    explicit UnsupportedRegimeError(const std::string& what) : std::domain_error(what) {}
};

/// Invalid parameter (zero s/t/u, zero denominator, x=0 derivative without f'(0), ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace stcalc
