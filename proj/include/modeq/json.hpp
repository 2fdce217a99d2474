#pragma once

// JSON forms of exact values. Rationals are always "num/den" strings.

#include "modeq/polynomial.hpp"
#include "modeq/rational.hpp"
#include "modeq/series.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace modeq {

using Json = nlohmann::ordered_json;

inline Json to_json(const PowerSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
    return Json{{"truncation_order", s.order()}, {"coeffs", std::move(coeffs)}};
}

inline PowerSeries series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("truncation_order") || !j.contains("coeffs"))
        throw DomainError("series JSON needs truncation_order and coeffs");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    if (coeffs.size() != j.at("truncation_order").get<std::size_t>() + 1)
        throw DomainError("series JSON: coeffs length disagrees with truncation_order");
    PowerSeries s(std::move(coeffs));
    s.infer_parity();
    return s;
}

inline Json to_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return coeffs;
}

} // namespace modeq
