#pragma once

#include <string>
#include <vector>

#include "stcalc/deformed.hpp"

namespace stcalc {

/// One verification-report row ({identity, params, N, residual, pass} in the
/// JSON-lines output).
struct VerifyRow {
    std::string identity;
    std::string params;
    long n = 0;
    double residual = 0.0;
    bool pass = false;
};

/// Suite names accepted by run_suite (plus "all").
std::vector<std::string> suite_names();

/// Runs one named identity suite at its documented parameters. n_max <= 0
/// keeps each check's documented default range.
std::vector<VerifyRow> run_suite(const std::string& suite, long n_max = 0);

} // namespace stcalc
