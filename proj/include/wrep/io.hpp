#ifndef WREP_IO_HPP
#define WREP_IO_HPP

#include <cstdint>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "wrep/gtchar.hpp"
#include "wrep/tableau.hpp"

namespace wrep {

using json = nlohmann::json;

inline json rational_to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational((long long)j.get<long long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw Error("parse", "expected a rational as integer or \"p/q\" string");
}

inline json pyramid_to_json(const Pyramid& p) {
    json j;
    j["q"] = p.heights();
    j["k"] = p.split();
    j["n"] = p.rows();
    return j;
}

inline Pyramid pyramid_from_json(const json& j) {
    std::vector<int> q = j.at("q").get<std::vector<int>>();
    int k = j.contains("k") ? j.at("k").get<int>() : default_split(q);
    int n = j.contains("n") ? j.at("n").get<int>() : 0;
    if (n == 0)
        for (int h : q) n = std::max(n, h);
    return Pyramid(q, k, n);
}

/// Tableau as {"q":[..],"k":int,"n":int,"rows":[[entries]]}, rows listed top
/// to bottom, each row left to right.
inline json tableau_to_json(const Tableau& t) {
    json j = pyramid_to_json(t.pyramid());
    json rows = json::array();
    for (int i = 1; i <= t.pyramid().rows(); ++i) {
        json row = json::array();
        for (const Entry& e : t.row(i)) row.push_back(rational_to_json(e));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

inline json tabloid_to_json(const RowTabloid& t) {
    json j = pyramid_to_json(t.pyramid());
    json rows = json::array();
    for (int i = 1; i <= t.pyramid().rows(); ++i) {
        json row = json::array();
        for (const Entry& e : t.row(i)) row.push_back(rational_to_json(e));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

inline Tableau tableau_from_json(const json& j) {
    Pyramid p = pyramid_from_json(j);
    const json& rows = j.at("rows");
    if ((int)rows.size() != p.rows()) throw Error("shape_mismatch", "wrong number of rows");
    std::vector<Entry> boxes(p.boxes(), Rational(0));
    for (int i = 1; i <= p.rows(); ++i) {
        const json& row = rows[i - 1];
        if ((int)row.size() != p.row_length(i)) throw Error("shape_mismatch", "wrong row length");
        int c0 = p.row_first_col(i);
        for (int t = 0; t < (int)row.size(); ++t)
            boxes[p.box_at(i, c0 + t) - 1] = rational_from_json(row[t]);
    }
    return Tableau(p, std::move(boxes));
}

inline RowTabloid tabloid_from_json(const json& j) { return row_class(tableau_from_json(j)); }

/// Character as a sorted list of {"monomial":[[i,"a",exp],..],"coeff":c}.
inline json character_to_json(const GTCharacter& ch) {
    json terms = json::array();
    for (const auto& [m, c] : ch.terms()) {
        json mono = json::array();
        for (const auto& [k, e] : m.exponents()) mono.push_back({k.first, k.second.to_string(), e});
        terms.push_back({{"monomial", mono}, {"coeff", c}});
    }
    json j;
    j["terms"] = terms;
    if (!ch.exact()) j["depth"] = ch.depth();
    return j;
}

/// Stable content hash for DOT node identifiers (FNV-1a over the canonical
/// serialization; deterministic across platforms).
inline std::string content_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return std::string(buf);
}

} // namespace wrep

#endif // WREP_IO_HPP
