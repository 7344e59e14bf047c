#pragma once

#include <json.hpp>
#include <string>

#include "deformlab/deformation.hpp"
#include "deformlab/degeneration.hpp"

namespace deformlab {

// File formats (all scalars are decimal-free strings "p/q" or "p"):
//   Algebra:       { "dim": n, "unity": 0 | null,
//                    "entries": [ {"i": int, "j": int, "k": int, "c": "p/q"}, ... ] }
//   Cochain:       { "degree": d, "dim": n,
//                    "entries": [ {"idx": [i1..id], "k": int, "c": "p/q"}, ... ] }
//   Deformation:   { "base": Algebra, "terms": [ Cochain(2), ... ] }
//   ParamLinearMap: row-major matrix of polynomial coefficient lists, lowest
//                   degree first: [[["1"],["0"]],[["0"],["0","1"]]] is diag(1, t).
//   LinearMap:     row-major matrix of scalar strings: [["1","0"],["0","0"]].
// Omitted entries are zero; duplicate entries are rejected.

using Json = nlohmann::ordered_json;

Json parse_json_text(const std::string& text);

Algebra algebra_from_json(const Json& j);
Json algebra_to_json(const Algebra& alg);

Cochain cochain_from_json(const Json& j);
Json cochain_to_json(const Cochain& c);

FormalDeformation deformation_from_json(const Json& j);
Json deformation_to_json(const FormalDeformation& def);

FormalIsomorphism isomorphism_from_json(const Json& j);
Json isomorphism_to_json(const FormalIsomorphism& iso);

RatMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const RatMatrix& m);

ParamMatrix param_matrix_from_json(const Json& j);
Json param_matrix_to_json(const ParamMatrix& m);

}  // namespace deformlab
