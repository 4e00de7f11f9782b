#include "stcalc/json_io.hpp"

#include <cstdio>

namespace stcalc {

nlohmann::json poly_to_json(const LaurentPoly& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [m, c] : p.terms())
        j.push_back(nlohmann::json::array({m.s_exp, m.t_exp, c.str()}));
    return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    LaurentPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3)
            throw ParameterError("poly_from_json: term must be [i, j, \"num/den\"]");
        p += LaurentPoly::monomial(term[0].get<int>(), term[1].get<int>(),
                                   Rational::from_string(term[2].get<std::string>()));
    }
    return p;
}

std::string canonical_poly_string(const LaurentPoly& p) { return poly_to_json(p).dump(); }

nlohmann::json complex_to_json(Cplx z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

Cplx complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParameterError("complex_from_json: expected [re, im]");
    return Cplx(j[0].get<double>(), j[1].get<double>());
}

nlohmann::json series_to_json(const TruncatedSeries<Cplx>& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(complex_to_json(s[n]));
    return nlohmann::json{{"order", s.order()}, {"coeffs", coeffs}};
}

TruncatedSeries<Cplx> series_from_json(const nlohmann::json& j) {
    int order = j.at("order").get<int>();
    TruncatedSeries<Cplx> s(order);
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != order + 1)
        throw ParameterError("series_from_json: coeffs length must be order+1");
    for (int n = 0; n <= order; ++n) s[n] = complex_from_json(coeffs[n]);
    return s;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace stcalc
