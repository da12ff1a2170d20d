#pragma once

// JSON forms of the library's values, used by the command-line tool.
//
//   polynomial:  [[e, c], ...]  meaning Σ c q^{e/2}; c is a number, or a
//                decimal string when it does not fit in 64 bits
//   matrix:      {"signature": "(n0;n1,...)", "row_half_count": n0,
//                 "column_half_counts": [n1, ...], "rows": R, "cols": C,
//                 "row_labels": [...], "col_labels": [...],
//                 "entries": [[row, col, polynomial], ...]}
//   diagram:     {"signature": ..., "text": "<diagram file contents>"}

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cleaved/diagram_io.hpp"
#include "cleaved/matrix.hpp"
#include "cleaved/ring.hpp"
#include "cleaved/tlcompare.hpp"

namespace cleaved::json_io {

using json = nlohmann::ordered_json;

inline json to_json(const Integer& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

inline Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer coefficient");
}

inline json to_json(const HalfLaurent& p) {
    json out = json::array();
    for (const auto& t : p.terms()) out.push_back(json::array({t.exp2, to_json(t.coeff)}));
    return out;
}

inline HalfLaurent polynomial_from_json(const json& j) {
    std::vector<std::pair<int, Integer>> pairs;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw std::invalid_argument("polynomial terms are [exponent, coefficient] pairs");
        pairs.emplace_back(t[0].get<int>(), integer_from_json(t[1]));
    }
    return HalfLaurent::from_pairs(std::move(pairs));
}

inline std::vector<std::string> column_labels(const PartitionMatrix& z) {
    const auto& ns = z.column_half_counts();
    std::vector<std::vector<std::string>> factor;
    for (int n : ns) factor.push_back(module_labels(n));
    std::vector<std::string> out;
    for (std::uint64_t c = 0; c < z.cols(); ++c) {
        const auto idx = split_tuple(c, ns);
        std::string s;
        for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? " x " : "") + factor[k][idx[k]];
        out.push_back(ns.empty() ? "1" : s);
    }
    return out;
}

inline json to_json(const PartitionMatrix& z) {
    json out;
    out["signature"] = z.shape_string();
    out["row_half_count"] = z.row_half_count();
    out["column_half_counts"] = z.column_half_counts();
    out["rows"] = z.rows();
    out["cols"] = z.cols();
    out["row_labels"] = module_labels(z.row_half_count());
    out["col_labels"] = column_labels(z);
    json entries = json::array();
    for (const auto& [key, v] : z.entries()) entries.push_back(json::array({key.first, key.second, to_json(v)}));
    out["entries"] = std::move(entries);
    return out;
}

inline PartitionMatrix partition_matrix_from_json(const json& j) {
    PartitionMatrix z(j.at("row_half_count").get<int>(), j.at("column_half_counts").get<std::vector<int>>());
    for (const auto& e : j.at("entries"))
        z.set(e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint64_t>(), polynomial_from_json(e.at(2)));
    return z;
}

inline json to_json(const RingMatrix& m) {
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["row_labels"] = m.row_labels;
    out["col_labels"] = m.col_labels;
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) entries.push_back(json::array({r, c, to_json(m(r, c))}));
    out["entries"] = std::move(entries);
    return out;
}

inline RingMatrix ring_matrix_from_json(const json& j) {
    RingMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    m.row_labels = j.at("row_labels").get<std::vector<std::string>>();
    m.col_labels = j.at("col_labels").get<std::vector<std::string>>();
    for (const auto& e : j.at("entries")) m(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()) = polynomial_from_json(e.at(2));
    return m;
}

inline json to_json(const RingVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

inline RingVector vector_from_json(const json& j) {
    RingVector v;
    for (const auto& x : j) v.push_back(polynomial_from_json(x));
    return v;
}

inline json diagram_json(const TangleDiagram& t) {
    json out;
    out["signature"] = t.signature();
    out["text"] = serialize(t);
    return out;
}

inline TangleDiagram diagram_from_json(const json& j) { return parse_tangle(j.at("text").get<std::string>(), "<json>"); }

}  // namespace cleaved::json_io
