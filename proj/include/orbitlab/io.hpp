#pragma once

#include <string>

#include <json.hpp>

#include "orbitlab/graded.hpp"
#include "orbitlab/matrix.hpp"
#include "orbitlab/orbits.hpp"

namespace orbitlab::io {

using Json = nlohmann::ordered_json;

/// {"rows": R, "cols": C, "domain": "Q", "entries": [["1/1", ...], ...]}
Json matrix_to_json(const exact::Matrix& m);
exact::Matrix matrix_from_json(const Json& j);

/// {"x": <matrix>, "y": <matrix>}
Json pair_to_json(const orbits::NilpotentPair& e);
orbits::NilpotentPair pair_from_json(const Json& j);

Json invariant_to_json(const orbits::OrbitInvariant& inv);

/// [[lambda, omega], ...] in canonical order.
Json decomposition_to_json(const graded::GradedDecomposition& d);

/// Reads "{(8,1),(2,1),(1,1)}" (spaces allowed).
graded::GradedDecomposition parse_decomposition(const std::string& text);

Json read_json_file(const std::string& path);

}  // namespace orbitlab::io
