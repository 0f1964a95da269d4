#pragma once

// Cone JSON input and shared JSON encodings.

#include "toric/cone.hpp"

#include <json.hpp>

#include <string>

namespace toric {

// Thrown for unreadable or malformed input files.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"name"?: str, "lattice_rank": int, and exactly one of
//  "rays": [[int]], "dual_rays": [[int]], "polytope_vertices": [[int]]}.
// For polytope_vertices, lattice_rank is the rank of the polytope's lattice and
// the resulting cone lives in rank lattice_rank + 1. Integers may be given as
// JSON numbers or decimal strings.
Cone cone_from_json(const nlohmann::json& j);
Cone load_cone_file(const std::string& path);

nlohmann::json int_to_json(const Int& x);
nlohmann::json vector_to_json(const IntVector& v);
nlohmann::json cone_to_json(const Cone& c);

}  // namespace toric
