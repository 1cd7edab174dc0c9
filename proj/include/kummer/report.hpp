#pragma once

// JSON and text renderings of computation results. The JSON forms mirror the
// in-memory structures field by field and parse back exactly; the CLI and the
// round-trip tests share this code.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kummer/curve.hpp"
#include "kummer/multipoint.hpp"
#include "kummer/onepoint.hpp"

namespace kummer {

inline nlohmann::json int_list_to_json(const std::vector<Int>& xs) {
    nlohmann::json j = nlohmann::json::array();
    for (Int x : xs) j.push_back(x.to_i64());
    return j;
}

inline std::vector<Int> int_list_from_json(const nlohmann::json& j) {
    std::vector<Int> out;
    for (const auto& v : j) out.push_back(Int(v.get<long long>()));
    return out;
}

inline nlohmann::json validation_to_json(const ValidationReport& rep) {
    nlohmann::json j;
    j["valid"] = rep.ok();
    j["issues"] = nlohmann::json::array();
    for (const auto& is : rep.issues)
        j["issues"].push_back({{"severity", is.is_error ? "error" : "warning"},
                               {"message", is.message},
                               {"hypothesis", is.hypothesis}});
    j["ramified_places"] = nlohmann::json::array();
    for (PlaceRef p : rep.ramified_places) j["ramified_places"].push_back(p.index);
    return j;
}

inline nlohmann::json one_point_to_json(const OnePointResult& r) {
    nlohmann::json j;
    j["place"] = r.place.index;
    j["lambda_used"] = r.lambda_used.to_i64();
    j["gaps"] = int_list_to_json(r.gaps);
    j["generators"] = int_list_to_json(r.generators);
    j["genus"] = static_cast<long long>(r.gaps.size());
    j["multiplicity"] = r.multiplicity.to_i64();
    if (r.frobenius)
        j["frobenius"] = r.frobenius->to_i64();
    else
        j["frobenius"] = nullptr;
    j["symmetric"] = r.symmetric;
    return j;
}

inline OnePointResult one_point_from_json(const nlohmann::json& j) {
    OnePointResult r;
    r.place = PlaceRef{j.at("place").get<int>()};
    r.lambda_used = Int(j.at("lambda_used").get<long long>());
    r.gaps = int_list_from_json(j.at("gaps"));
    r.generators = int_list_from_json(j.at("generators"));
    r.multiplicity = Int(j.at("multiplicity").get<long long>());
    if (!j.at("frobenius").is_null()) r.frobenius = Int(j.at("frobenius").get<long long>());
    r.symmetric = j.at("symmetric").get<bool>();
    return r;
}

inline nlohmann::json witness_to_json(const WitnessFunction& w) {
    return {{"y_exponent", w.y_exponent.to_i64()}, {"z_exponents", int_list_to_json(w.z_exponents)}};
}

inline WitnessFunction witness_from_json(const nlohmann::json& j) {
    WitnessFunction w;
    w.y_exponent = Int(j.at("y_exponent").get<long long>());
    w.z_exponents = int_list_from_json(j.at("z_exponents"));
    return w;
}

inline nlohmann::json gamma_element_to_json(const GammaElement& el) {
    return {{"tuple", int_list_to_json(el.tuple)},
            {"i", el.i.to_i64()},
            {"j", int_list_to_json(el.j)},
            {"lambda_used", el.lambda_used.to_i64()},
            {"witness", witness_to_json(el.witness)}};
}

inline GammaElement gamma_element_from_json(const nlohmann::json& j) {
    GammaElement el;
    el.tuple = int_list_from_json(j.at("tuple"));
    el.i = Int(j.at("i").get<long long>());
    el.j = int_list_from_json(j.at("j"));
    el.lambda_used = Int(j.at("lambda_used").get<long long>());
    el.witness = witness_from_json(j.at("witness"));
    return el;
}

inline std::string tuple_to_string(const std::vector<Int>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += t[i].str();
    }
    return s + ")";
}

inline std::string int_list_to_string(const std::vector<Int>& xs) {
    std::string s = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += xs[i].str();
    }
    return s + "}";
}

// Renders a witness monomial as z-powers over y and z powers, e.g.
// "z2*z3 / (y^4 * z1^2)".
inline std::string witness_to_string(const CurveData& c, const WitnessFunction& w) {
    auto name = [&](int b) { return "z" + std::to_string(b); };
    std::string num, den;
    auto append = [](std::string& dst, const std::string& factor) {
        if (!dst.empty()) dst += "*";
        dst += factor;
    };
    if (w.y_exponent > Int(0))
        append(num, w.y_exponent == Int(1) ? "y" : "y^" + w.y_exponent.str());
    else if (w.y_exponent < Int(0))
        append(den, w.y_exponent == Int(-1) ? "y" : "y^" + (-w.y_exponent).str());
    for (int b = 1; b <= c.r() && static_cast<size_t>(b) < w.z_exponents.size(); ++b) {
        Int e = w.z_exponents[static_cast<size_t>(b)];
        if (e.is_zero()) continue;
        std::string factor = e.abs() == Int(1) ? name(b) : name(b) + "^" + e.abs().str();
        append(e > Int(0) ? num : den, factor);
    }
    if (num.empty()) num = "1";
    if (den.empty()) return num;
    return num + " / (" + den + ")";
}

}  // namespace kummer
