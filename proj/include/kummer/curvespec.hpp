#pragma once

// Curve-spec documents: a human-readable key-value format and a canonical
// JSON rendering, both lossless. The key-value form is line based:
//
//   # comment
//   m = 6
//   q = 25                  # optional base field
//   branch = 1 1 "a1"       # lambda degree label (label may be bare or quoted)
//   branch = 1 1 "a2"
//
// or, alternatively, a preset reference:
//
//   preset = ggs 2 3
//
// JSON documents use {"m": ..., "q": ..., "branches": [{"lambda": ...,
// "degree": ..., "label": ...}]} or {"preset": {"name": ..., "params": [...]}}.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kummer/curve.hpp"
#include "kummer/intmath.hpp"

namespace kummer {

// Builds a preset curve by name: eqmult m,r,lambda[,q] | ggs q,n | bm q,n,d,m.
inline CurveData make_preset(const std::string& name, const std::vector<Int>& params) {
    if (name == "eqmult") {
        if (params.size() == 3) return preset_equal_multiplicity(params[0], params[1], params[2]);
        if (params.size() == 4)
            return preset_equal_multiplicity(params[0], params[1], params[2], params[3]);
        throw domain_error("preset eqmult expects m,r,lambda[,q]");
    }
    if (name == "ggs") {
        if (params.size() != 2) throw domain_error("preset ggs expects q,n");
        return preset_ggs(params[0], params[1]);
    }
    if (name == "bm") {
        if (params.size() != 4) throw domain_error("preset bm expects q,n,d,m");
        return preset_bm_subcover(params[0], params[1], params[2], params[3]);
    }
    throw domain_error("unknown preset '" + name + "' (known: eqmult, ggs, bm)");
}

inline std::vector<std::pair<std::string, std::string>> preset_catalog() {
    return {
        {"eqmult", "m,r,lambda[,q] : y^m = prod_{i=1}^{r} (x - a_i)^lambda"},
        {"ggs", "q,n : plane model of the GGS(q, n) curve over F_{q^(2n)}"},
        {"bm", "q,n,d,m : subcover y^m = x^d (x^d - 1) ((1 - x^(d(q-1)))/(x^d - 1))^(q+1)"},
    };
}

namespace specdetail {

inline std::string quote_label(const std::string& label) {
    std::string out = "\"";
    for (char ch : label) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

inline Int parse_int_token(const std::string& tok, const std::string& where) {
    size_t pos = 0;
    bool neg = false;
    if (pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+')) {
        neg = tok[pos] == '-';
        ++pos;
    }
    if (pos >= tok.size()) throw domain_error("curve spec: bad integer '" + tok + "' in " + where);
    Int v = 0;
    for (; pos < tok.size(); ++pos) {
        if (tok[pos] < '0' || tok[pos] > '9')
            throw domain_error("curve spec: bad integer '" + tok + "' in " + where);
        v = v * 10 + Int(tok[pos] - '0');
    }
    return neg ? -v : v;
}

}  // namespace specdetail

inline std::string write_curve_keyvalue(const CurveData& c) {
    std::ostringstream out;
    out << "m = " << c.m << "\n";
    if (c.base_field_q) out << "q = " << *c.base_field_q << "\n";
    for (const Branch& b : c.branches)
        out << "branch = " << b.lambda << " " << b.degree << " "
            << specdetail::quote_label(b.label) << "\n";
    return out.str();
}

inline CurveData parse_curve_keyvalue(const std::string& text) {
    CurveData c;
    std::optional<std::string> preset_name;
    std::vector<Int> preset_params;
    bool saw_m = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = "line " + std::to_string(lineno);
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t eq = line.find('=');
        std::string key, value;
        if (eq == std::string::npos) {
            key = line;
        } else {
            key = line.substr(0, eq);
            value = line.substr(eq + 1);
        }
        auto strip = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            size_t b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        key = strip(key);
        value = strip(value);
        if (key.empty()) {
            if (!value.empty()) throw domain_error("curve spec: stray text at " + where);
            continue;
        }
        if (eq == std::string::npos) throw domain_error("curve spec: missing '=' at " + where);

        if (key == "m") {
            c.m = specdetail::parse_int_token(value, where);
            saw_m = true;
        } else if (key == "q") {
            c.base_field_q = specdetail::parse_int_token(value, where);
        } else if (key == "branch") {
            // lambda degree [label]; label bare or double-quoted
            std::istringstream fields(value);
            std::string lam_tok, deg_tok;
            if (!(fields >> lam_tok >> deg_tok))
                throw domain_error("curve spec: branch needs 'lambda degree [label]' at " + where);
            Branch b;
            b.lambda = specdetail::parse_int_token(lam_tok, where);
            b.degree = specdetail::parse_int_token(deg_tok, where);
            std::string rest;
            std::getline(fields, rest);
            rest = strip(rest);
            if (!rest.empty() && rest.front() == '"') {
                std::string label;
                size_t i = 1;
                for (; i < rest.size() && rest[i] != '"'; ++i) {
                    if (rest[i] == '\\' && i + 1 < rest.size()) ++i;
                    label.push_back(rest[i]);
                }
                if (i >= rest.size()) throw domain_error("curve spec: unterminated label at " + where);
                b.label = label;
            } else {
                b.label = rest;
            }
            if (b.label.empty()) b.label = "p" + std::to_string(c.branches.size() + 1);
            c.branches.push_back(std::move(b));
        } else if (key == "preset") {
            std::istringstream fields(value);
            std::string name;
            fields >> name;
            preset_name = name;
            std::string tok;
            while (fields >> tok) preset_params.push_back(specdetail::parse_int_token(tok, where));
        } else {
            throw domain_error("curve spec: unknown key '" + key + "' at " + where);
        }
    }
    if (preset_name) {
        if (saw_m || !c.branches.empty())
            throw domain_error("curve spec: give either a preset or explicit m/branches, not both");
        return make_preset(*preset_name, preset_params);
    }
    if (!saw_m) throw domain_error("curve spec: missing 'm'");
    if (c.branches.empty()) throw domain_error("curve spec: no branches given");
    return c;
}

inline nlohmann::json curve_to_json(const CurveData& c) {
    nlohmann::json j;
    j["m"] = c.m.to_i64();
    if (c.base_field_q) j["q"] = c.base_field_q->to_i64();
    j["branches"] = nlohmann::json::array();
    for (const Branch& b : c.branches)
        j["branches"].push_back(
            {{"lambda", b.lambda.to_i64()}, {"degree", b.degree.to_i64()}, {"label", b.label}});
    return j;
}

inline CurveData curve_from_json(const nlohmann::json& j) {
    if (j.contains("preset")) {
        std::vector<Int> params;
        for (const auto& v : j.at("preset").at("params")) params.push_back(Int(v.get<long long>()));
        return make_preset(j.at("preset").at("name").get<std::string>(), params);
    }
    CurveData c;
    c.m = Int(j.at("m").get<long long>());
    if (j.contains("q") && !j.at("q").is_null()) c.base_field_q = Int(j.at("q").get<long long>());
    for (const auto& b : j.at("branches"))
        c.branches.push_back({Int(b.at("lambda").get<long long>()),
                              Int(b.at("degree").get<long long>()),
                              b.value("label", std::string())});
    return c;
}

// Reads either format; JSON documents start with '{'.
inline CurveData parse_curve_document(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return curve_from_json(nlohmann::json::parse(text));
    return parse_curve_keyvalue(text);
}

}  // namespace kummer
