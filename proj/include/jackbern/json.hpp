#pragma once

/// \file json.hpp
/// JSON forms of the library's values. Rationals are strings, partitions are
/// integer arrays zero-padded to r, and keys keep insertion order so a
/// compact dump of a parsed document reproduces the original bytes.

#include "jackbern/jack.hpp"
#include "jackbern/partition.hpp"
#include "jackbern/rational.hpp"
#include "jackbern/report.hpp"
#include "jackbern/series.hpp"
#include "jackbern/sympoly.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jackbern {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON input.
struct JsonFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Json rational_to_json(const Rational& x) { return to_string(x); }

inline Rational rational_from_json(const Json& j)
{
    if (!j.is_string())
        throw JsonFormatError("rational must be a string, got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(e.what());
    }
}

inline Json partition_to_json(const Partition& m, int r) { return Json(m.padded(r)); }

inline Partition partition_from_json(const Json& j)
{
    if (!j.is_array())
        throw JsonFormatError("partition must be an array, got " + j.dump());
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw JsonFormatError("partition entries must be integers, got " + x.dump());
        parts.push_back(x.get<int>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(e.what());
    }
}

namespace detail {

inline const Json& require_field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw JsonFormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline int require_int(const Json& j, const char* key)
{
    const Json& v = require_field(j, key);
    if (!v.is_number_integer())
        throw JsonFormatError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

inline std::string require_string(const Json& j, const char* key)
{
    const Json& v = require_field(j, key);
    if (!v.is_string())
        throw JsonFormatError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

inline Json terms_to_json(const std::map<Partition, Rational>& terms, int r)
{
    Json arr = Json::array();
    for (const auto& [k, c] : terms)
        arr.push_back(Json{{"partition", partition_to_json(k, r)}, {"coeff", rational_to_json(c)}});
    return arr;
}

} // namespace detail

/// {"r": r, "basis": "monomial", ["family": ...,] "terms": [...]}
inline Json sympoly_to_json(const SymPoly& f, const std::optional<std::string>& family = std::nullopt)
{
    Json j;
    j["r"] = f.r();
    j["basis"] = "monomial";
    if (family)
        j["family"] = *family;
    j["terms"] = detail::terms_to_json(f.terms(), f.r());
    return j;
}

inline SymPoly sympoly_from_json(const Json& j)
{
    const int r = detail::require_int(j, "r");
    if (r < 1)
        throw JsonFormatError("field 'r' must be positive");
    if (detail::require_string(j, "basis") != "monomial")
        throw JsonFormatError("expected basis 'monomial'");
    const Json& terms = detail::require_field(j, "terms");
    if (!terms.is_array())
        throw JsonFormatError("field 'terms' must be an array");
    SymPoly out(r);
    for (const auto& t : terms) {
        Partition k = partition_from_json(detail::require_field(t, "partition"));
        if (k.length() > r)
            throw JsonFormatError("partition " + k.str() + " has more than r parts");
        out.add_term(k, rational_from_json(detail::require_field(t, "coeff")));
    }
    return out;
}

inline Json expansion_to_json(const JackExpansion& e)
{
    Json j;
    j["r"] = e.r;
    j["d"] = rational_to_json(e.d);
    j["basis"] = e.basis == JackBasis::P ? "P" : "Psi";
    j["terms"] = detail::terms_to_json(e.coeffs, e.r);
    return j;
}

inline JackExpansion expansion_from_json(const Json& j)
{
    JackExpansion e;
    e.r = detail::require_int(j, "r");
    if (e.r < 1)
        throw JsonFormatError("field 'r' must be positive");
    e.d = rational_from_json(detail::require_field(j, "d"));
    const std::string basis = detail::require_string(j, "basis");
    if (basis == "P")
        e.basis = JackBasis::P;
    else if (basis == "Psi")
        e.basis = JackBasis::Psi;
    else
        throw JsonFormatError("expected basis 'P' or 'Psi', got '" + basis + "'");
    for (const auto& t : detail::require_field(j, "terms")) {
        Partition k = partition_from_json(detail::require_field(t, "partition"));
        Rational c = rational_from_json(detail::require_field(t, "coeff"));
        if (c != 0)
            e.coeffs[k] += c;
    }
    return e;
}

inline Json graded_series_to_json(const GradedSeries& g)
{
    Json j;
    j["r"] = g.r();
    j["max_degree"] = g.max_degree();
    Json comps = Json::array();
    for (const auto& c : g.components())
        comps.push_back(sympoly_to_json(c));
    j["components"] = std::move(comps);
    return j;
}

inline GradedSeries graded_series_from_json(const Json& j)
{
    const int r = detail::require_int(j, "r");
    const int top = detail::require_int(j, "max_degree");
    const Json& comps = detail::require_field(j, "components");
    if (!comps.is_array() || static_cast<int>(comps.size()) != top + 1)
        throw JsonFormatError("'components' must hold max_degree + 1 entries");
    GradedSeries g(r, top);
    for (int n = 0; n <= top; ++n) {
        SymPoly c = sympoly_from_json(comps[static_cast<std::size_t>(n)]);
        if (c.r() != r)
            throw JsonFormatError("component has a different r");
        try {
            g.add_to_component(n, c);
        } catch (const std::invalid_argument& e) {
            throw JsonFormatError(e.what());
        }
    }
    return g;
}

inline Json report_to_json(const VerificationReport& rep)
{
    Json j;
    j["identity"] = rep.identity;
    Json params = Json::object();
    for (const auto& [k, v] : rep.params)
        params[k] = v;
    j["params"] = std::move(params);
    j["status"] = rep.pass ? "pass" : "fail";
    if (rep.counterexample)
        j["counterexample"] = Json{{"partition", rep.counterexample->partition},
                                   {"lhs", rep.counterexample->lhs},
                                   {"rhs", rep.counterexample->rhs}};
    else
        j["counterexample"] = nullptr;
    return j;
}

inline VerificationReport report_from_json(const Json& j)
{
    VerificationReport rep;
    rep.identity = detail::require_string(j, "identity");
    for (const auto& [k, v] : detail::require_field(j, "params").items())
        rep.params.emplace_back(k, v.get<std::string>());
    const std::string status = detail::require_string(j, "status");
    if (status != "pass" && status != "fail")
        throw JsonFormatError("status must be 'pass' or 'fail'");
    rep.pass = status == "pass";
    const Json& ce = detail::require_field(j, "counterexample");
    if (!ce.is_null())
        rep.counterexample = Counterexample{detail::require_string(ce, "partition"), detail::require_string(ce, "lhs"),
                                            detail::require_string(ce, "rhs")};
    if (rep.pass == rep.counterexample.has_value())
        throw JsonFormatError("status and counterexample disagree");
    return rep;
}

} // namespace jackbern
