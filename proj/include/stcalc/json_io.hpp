#pragma once

#include <string>

#include <json.hpp>

#include "stcalc/eval_context.hpp"
#include "stcalc/laurent.hpp"
#include "stcalc/series.hpp"

namespace stcalc {

/// Canonical polynomial serialization: sorted term list [[i, j, "num/den"], ...].
/// Equal polynomials serialize to byte-identical strings.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);
std::string canonical_poly_string(const LaurentPoly& p);

/// Complex numbers serialize as [re, im].
nlohmann::json complex_to_json(Cplx z);
Cplx complex_from_json(const nlohmann::json& j);

/// Series serialize as {"order": N, "coeffs": [scalar...]}.
nlohmann::json series_to_json(const TruncatedSeries<Cplx>& s);
TruncatedSeries<Cplx> series_from_json(const nlohmann::json& j);

/// Deterministic float formatting for report output (%.17g round-trips).
std::string format_double(double x);

} // namespace stcalc
