#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "icw/json_io.hpp"

namespace icw {
namespace fixtures {

// The concrete data shipped with the library: the three instances, the two
// encoding matrices, the three matroid specs, plus the two small helper
// instances. Checked-in JSON is the single source of truth; tests pin its
// SHA-256.

inline const std::vector<std::string>& instance_names() {
    static const std::vector<std::string> n{"I1", "I2", "I3", "Ia", "Example1"};
    return n;
}
inline const std::vector<std::string>& matrix_names() {
    static const std::vector<std::string> n{"H_fig1", "H_fig2"};
    return n;
}
inline const std::vector<std::string>& matroid_names() {
    static const std::vector<std::string> n{"N1", "N2", "N3"};
    return n;
}

inline std::string normalize_name(std::string name) {
    if (name == "I_a") return "Ia";
    return name;
}

inline std::string dir() {
    if (const char* env = std::getenv("ICW_FIXTURE_DIR")) return env;
#ifdef ICW_DEFAULT_FIXTURE_DIR
    return ICW_DEFAULT_FIXTURE_DIR;
#else
    return "data/fixtures";
#endif
}

inline bool is_fixture(const std::string& raw) {
    std::string name = normalize_name(raw);
    for (const auto& list : {instance_names(), matrix_names(), matroid_names()})
        for (const auto& n : list)
            if (n == name) return true;
    return false;
}

inline json raw(const std::string& raw_name) {
    std::string name = normalize_name(raw_name);
    if (!is_fixture(name)) fail(ErrorKind::UnknownFixture, raw_name);
    return load_json_file(dir() + "/" + name + ".json");
}

inline Instance instance(const std::string& name) {
    for (const auto& n : instance_names())
        if (n == normalize_name(name)) return instance_from_json(raw(name));
    fail(ErrorKind::UnknownFixture, name + " is not an instance fixture");
}

/// The shipped matrices are 0/1-valued; pass p to interpret them over GF(p).
inline BlockMatrix matrix(const std::string& name, int p = 0) {
    for (const auto& n : matrix_names())
        if (n == normalize_name(name)) return block_matrix_from_json(raw(name), p);
    fail(ErrorKind::UnknownFixture, name + " is not a matrix fixture");
}

inline MatroidSpec matroid(const std::string& name) {
    for (const auto& n : matroid_names())
        if (n == normalize_name(name)) return matroid_from_json(raw(name));
    fail(ErrorKind::UnknownFixture, name + " is not a matroid fixture");
}

/// Canonical serialization used for integrity pinning: compact dump of the
/// parsed JSON (object keys sorted).
inline std::string canonical(const std::string& name) { return raw(name).dump(); }

}  // namespace fixtures
}  // namespace icw
