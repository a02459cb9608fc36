#pragma once

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hybridseq/identities.hpp"

namespace hybridseq::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }

/// Accepts "p", "p/q" strings and JSON integers; floats are rejected.
inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw parse_error("expected a fraction string or integer, got " + j.dump());
}

inline json to_json(const QuadExt& q) { return json{{"rat", q.rat().str()}, {"rad", q.rad().str()}}; }

template <Scalar S>
json to_json(const Hybrid<S>& k) {
    return json{{"re", to_json(k.re)}, {"i", to_json(k.i)}, {"eps", to_json(k.eps)}, {"h", to_json(k.h)}};
}

inline RationalHybrid rational_hybrid_from_json(const json& j) {
    return {rational_from_json(j.at("re")), rational_from_json(j.at("i")), rational_from_json(j.at("eps")),
            rational_from_json(j.at("h"))};
}

inline json to_json(const RecurrenceParams& p) {
    return json{{"a", p.a.str()}, {"b", p.b.str()}, {"c", p.c.str()}, {"w0", p.w0.str()}, {"w1", p.w1.str()}};
}

inline RecurrenceParams params_from_json(const json& j) {
    return RecurrenceParams::make(rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                                  rational_from_json(j.at("c")), rational_from_json(j.at("w0")),
                                  rational_from_json(j.at("w1")));
}

/// One JSON-lines record. Zero residuals are elided; a passing report
/// carries "residual": "0".
inline json to_json(const IdentityReport& r) {
    json j{{"identity", r.identity}, {"params", to_json(r.params)}, {"indices", r.indices}, {"passed", r.passed}};
    if (r.skipped) j["skipped"] = true;
    if (!r.error.empty()) {
        j["error"] = r.error;
        if (r.expected_error) j["expected_error"] = true;
        return j;
    }
    json parts = json::array();
    for (const auto& res : r.residuals)
        if (!res.value.is_zero()) parts.push_back(json{{"label", res.label}, {"value", to_json(res.value)}});
    if (parts.empty())
        j["residual"] = "0";
    else
        j["residual"] = std::move(parts);
    return j;
}

// ---------------------------------------------------------------------------
// Term records

struct TermRecord {
    long n = 0;
    Rational w;
    std::optional<RationalHybrid> hybrid;
    std::optional<Rational> character;
};

inline json to_json(const TermRecord& t) {
    json j{{"n", t.n}, {"w", t.w.str()}};
    if (t.hybrid) {
        j["re"] = t.hybrid->re.str();
        j["i"] = t.hybrid->i.str();
        j["eps"] = t.hybrid->eps.str();
        j["h"] = t.hybrid->h.str();
    }
    if (t.character) j["character"] = t.character->str();
    return j;
}

inline TermRecord term_record_from_json(const json& j) {
    TermRecord t;
    t.n = j.at("n").get<long>();
    t.w = rational_from_json(j.at("w"));
    if (j.contains("re")) t.hybrid = rational_hybrid_from_json(j);
    if (j.contains("character")) t.character = rational_from_json(j.at("character"));
    return t;
}

inline std::vector<std::string> term_csv_header(bool hybrid) {
    std::vector<std::string> h{"n", "w"};
    if (hybrid) h.insert(h.end(), {"re", "i", "eps", "h", "character"});
    return h;
}

inline std::vector<std::string> term_csv_row(const TermRecord& t) {
    std::vector<std::string> row{std::to_string(t.n), t.w.str()};
    if (t.hybrid) {
        row.insert(row.end(), {t.hybrid->re.str(), t.hybrid->i.str(), t.hybrid->eps.str(), t.hybrid->h.str(),
                               t.character ? t.character->str() : std::string()});
    }
    return row;
}

/// Quotes a field only when it contains a separator, quote or newline.
inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k) os << ',';
        os << csv_escape(fields[k]);
    }
    os << '\n';
}

inline std::vector<std::string> report_csv_header() {
    return {"identity", "a", "b", "c", "w0", "w1", "indices", "passed", "error"};
}

inline std::vector<std::string> report_csv_row(const IdentityReport& r) {
    std::string idx;
    for (std::size_t k = 0; k < r.indices.size(); ++k) idx += (k ? " " : "") + std::to_string(r.indices[k]);
    return {r.identity, r.params.a.str(), r.params.b.str(), r.params.c.str(), r.params.w0.str(), r.params.w1.str(),
            idx, r.passed ? "true" : "false", r.error};
}

}  // namespace hybridseq::io
