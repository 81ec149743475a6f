#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "icw/block.hpp"
#include "icw/instance.hpp"
#include "icw/lincode.hpp"
#include "icw/matroid.hpp"

namespace icw {

using json = nlohmann::json;

// All on-disk indices are 1-based; entries are row-major over the full grid.

inline json instance_to_json(const Instance& inst) {
    json b = json::array();
    for (int i = 1; i <= inst.m(); ++i) b.push_back(inst.interfering(i));
    return json{{"m", inst.m()}, {"B", b}};
}

inline Instance instance_from_json(const json& j) {
    if (!j.contains("m") || !j.contains("B")) fail(ErrorKind::ParseError, "instance needs m and B");
    std::vector<std::vector<int>> b;
    for (const auto& row : j.at("B")) b.push_back(row.get<std::vector<int>>());
    return Instance(j.at("m").get<int>(), std::move(b));
}

inline json block_matrix_to_json(const BlockMatrix& h) {
    json rows = json::array();
    for (int r = 0; r < h.r(); ++r) {
        json row = json::array();
        for (int c = 0; c < h.inner().cols(); ++c) row.push_back(static_cast<int>(h.inner().at(r, c)));
        rows.push_back(row);
    }
    return json{{"p", h.field().p()}, {"t", h.t()}, {"m", h.m()}, {"r", h.r()}, {"entries", rows}};
}

/// `p_override`, when nonzero, reinterprets the stored entries in GF(p):
/// the shipped matrices are 0/1 and valid over every supported field.
inline BlockMatrix block_matrix_from_json(const json& j, int p_override = 0) {
    for (const char* k : {"p", "t", "m", "r", "entries"})
        if (!j.contains(k)) fail(ErrorKind::ParseError, std::string("matrix needs field ") + k);
    int p = p_override > 0 ? p_override : j.at("p").get<int>();
    int t = j.at("t").get<int>(), m = j.at("m").get<int>(), r = j.at("r").get<int>();
    FieldSpec f(p);
    std::vector<Scalar> entries;
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != r) fail(ErrorKind::ParseError, "row count mismatch");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m * t) fail(ErrorKind::ParseError, "column count mismatch");
        for (const auto& v : row) {
            int e = v.get<int>();
            if (!f.in_field(e)) fail(ErrorKind::NotInField, "entry " + std::to_string(e));
            entries.push_back(static_cast<Scalar>(e));
        }
    }
    return BlockMatrix(GfMatrix(f, r, m * t, std::move(entries)), m, t);
}

inline json matroid_to_json(const MatroidSpec& spec) {
    json ral = json::array();
    for (const auto& [s, mn] : spec.rank_at_least) ral.push_back(json{{"set", s}, {"min", mn}});
    return json{{"n", spec.n},
                {"rank", spec.f},
                {"t", spec.t},
                {"basis", spec.basis_sets},
                {"circuits", spec.circuit_sets},
                {"quasi_circuits", spec.quasi_circuit_sets},
                {"rank_at_least", ral}};
}

inline MatroidSpec matroid_from_json(const json& j) {
    MatroidSpec s;
    s.n = j.at("n").get<int>();
    s.f = j.at("rank").get<int>();
    s.t = j.value("t", 1);
    for (const auto& b : j.value("basis", json::array())) s.basis_sets.push_back(b.get<std::vector<int>>());
    for (const auto& c : j.value("circuits", json::array())) s.circuit_sets.push_back(c.get<std::vector<int>>());
    for (const auto& q : j.value("quasi_circuits", json::array()))
        s.quasi_circuit_sets.push_back(q.get<std::vector<int>>());
    for (const auto& r : j.value("rank_at_least", json::array()))
        s.rank_at_least.emplace_back(r.at("set").get<std::vector<int>>(), r.at("min").get<int>());
    s.validate();
    return s;
}

inline json report_to_json(const DecodabilityReport& rep) {
    json users = json::array();
    for (const auto& u : rep.users)
        users.push_back(json{{"i", u.user}, {"rank_iB", u.rank_iB}, {"rank_B", u.rank_B}, {"pass", u.pass}});
    return json{{"pass", rep.pass}, {"rate", rep.rate()}, {"users", users}};
}

inline json verify_report_to_json(const VerifyReport& rep) {
    json v = json::array();
    for (const auto& viol : rep.violations)
        v.push_back(json{{"kind", viol.kind}, {"set", viol.set}, {"detail", viol.detail}});
    return json{{"valid", rep.valid}, {"violations", v}};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(ErrorKind::ParseError, path + ": " + e.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::ParseError, "cannot write " + path);
    out << j.dump() << "\n";
}

}  // namespace icw
