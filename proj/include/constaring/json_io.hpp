#pragma once

#include <json.hpp>

#include "gray.hpp"
#include "qr.hpp"
#include "rcode.hpp"
#include "report.hpp"

namespace constaring {

/// Key order is preserved everywhere so identical inputs serialize to
/// byte-identical output.
using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "constaring/1";

inline ordered_json to_json(const FpPoly& a) { return ordered_json(a.coeffs()); }

inline FpPoly fppoly_from_json(const ordered_json& j, const PrimeField& f) {
    return FpPoly(f, j.get<std::vector<i64>>());
}

inline ordered_json to_json(const RingElement& r) { return ordered_json{r.a, r.b, r.c, r.d}; }

inline ordered_json to_json(const RPoly& g, const IdempotentSet& ids) {
    ordered_json basis = ordered_json::array();
    ordered_json text = ordered_json::array();
    for (const RingElement& c : g.coeffs()) {
        basis.push_back(to_json(c));
        text.push_back(to_string(c));
    }
    ordered_json comps = ordered_json::array();
    for (const FpPoly& c : components(g, ids)) comps.push_back(to_json(c));
    return ordered_json{{"basis", basis}, {"text", text}, {"comps", comps}};
}

inline const char* tag_name(ShiftTag tag) {
    switch (tag) {
        case ShiftTag::cyclic: return "cyclic";
        case ShiftTag::negacyclic: return "negacyclic";
        default: return "none";
    }
}

inline ordered_json to_json(const FpLinearCode& c) {
    return ordered_json{{"p", c.field().p()},
                        {"n", c.length()},
                        {"basis", c.basis()},
                        {"modulus_tag", tag_name(c.tag())}};
}

inline ordered_json to_json(const RLinearCode& c) {
    ordered_json comps = ordered_json::array();
    for (int i = 1; i <= 4; ++i) comps.push_back(to_json(c.comp(i)));
    return ordered_json{{"p", c.field().p()}, {"n", c.length()}, {"comps", comps}};
}

inline ordered_json to_json(const Report& r) {
    ordered_json checks = ordered_json::array();
    for (const Check& c : r.checks) {
        ordered_json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    ordered_json out{{"suite", r.suite}, {"all_pass", r.all_pass()}, {"checks", std::move(checks)}};
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

}  // namespace constaring
