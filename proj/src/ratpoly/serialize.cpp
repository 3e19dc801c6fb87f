#include "kasym/ratpoly/serialize.hpp"

#include "kasym/errors.hpp"
#include "kasym/ratpoly/rational.hpp"

namespace kasym::ratpoly {

Json to_json(const ParamPoly& p) {
    Json j = Json::array();
    for (const auto& c : p.coefficients()) j.push_back(to_string(c));
    return j;
}

Json to_json(const CoeffPoly& p) {
    Json j = Json::array();
    for (const auto& c : p.coefficients()) j.push_back(to_json(c));
    return j;
}

ParamPoly param_poly_from_json(const Json& j, Param p) {
    if (!j.is_array()) throw ParseError("expected an array of rational strings");
    std::vector<BigRational> c;
    for (const auto& x : j) {
        if (!x.is_string()) throw ParseError("expected a rational string");
        c.push_back(parse_rational(x.get<std::string>()));
    }
    return ParamPoly(p, std::move(c));
}

CoeffPoly coeff_poly_from_json(const Json& j, Param p) {
    if (!j.is_array()) throw ParseError("expected an array of coefficient arrays");
    std::vector<ParamPoly> c;
    for (const auto& x : j) c.push_back(param_poly_from_json(x, p));
    const CoeffPoly r(std::move(c));
    return r.with_parity(r.actual_parity());
}

}  // namespace kasym::ratpoly
