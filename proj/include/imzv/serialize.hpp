#pragma once

// JSON forms of the library's value types. Keys keep insertion order so that
// output is byte-stable across runs.

#include "imzv/index.hpp"
#include "imzv/index_sum.hpp"
#include "imzv/polynomial.hpp"
#include "imzv/word.hpp"

#include <json.hpp>

#include <string>

namespace imzv {

using Json = nlohmann::ordered_json;

inline Json to_json(const Index& k) { return Json(k.parts()); }

inline Index index_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("index JSON must be an array of integers");
    return Index(j.get<std::vector<int>>());
}

inline Json to_json(const Rat& q) { return to_string(q); }

/// {"coeffs": ["1/1", "1/1"]} means 1 + t.
inline Json to_json(const RatPoly& p)
{
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(to_string(c));
    return Json{{"coeffs", coeffs}};
}

inline RatPoly ratpoly_from_json(const Json& j)
{
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(parse_rat(c.get<std::string>()));
    return RatPoly(std::move(coeffs));
}

inline Json to_json(const ModPPoly& p) { return Json{{"p", p.prime()}, {"coeffs", p.coeffs()}}; }

inline Json term_json(const Index& k, const RatPoly& c) { return Json{{"index", to_json(k)}, {"coeff", to_json(c)}}; }

/// Array of {"index", "coeff"} terms sorted lexicographically by index.
inline Json to_json(const IndexSum& s)
{
    Json out = Json::array();
    for (const auto& [k, c] : s)
        out.push_back(term_json(k, c));
    return out;
}

inline IndexSum index_sum_from_json(const Json& j)
{
    IndexSum out;
    for (const auto& term : j)
        out.add(index_from_json(term.at("index")), ratpoly_from_json(term.at("coeff")));
    return out;
}

inline Json to_json(const NCPoly& p)
{
    Json out = Json::array();
    for (const auto& [w, c] : p)
        out.push_back(Json{{"word", w.str()}, {"coeff", to_json(c)}});
    return out;
}

inline NCPoly ncpoly_from_json(const Json& j)
{
    NCPoly out;
    for (const auto& term : j)
        out.add(Word::parse(term.at("word").get<std::string>()), ratpoly_from_json(term.at("coeff")));
    return out;
}

/// {"order": U, "coeffs": [NCPoly for u^0, ..., NCPoly for u^U]}
inline Json to_json(const NCSeries& s)
{
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(to_json(c));
    return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline NCSeries ncseries_from_json(const Json& j)
{
    NCSeries out(j.at("order").get<int>());
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != out.order() + 1)
        throw std::invalid_argument("NCSeries JSON: coefficient count does not match order");
    for (int n = 0; n <= out.order(); ++n)
        out[n] = ncpoly_from_json(coeffs[static_cast<std::size_t>(n)]);
    return out;
}

} // namespace imzv
