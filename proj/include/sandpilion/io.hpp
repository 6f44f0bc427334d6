#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sandpilion/bigint.hpp"
#include "sandpilion/formulas.hpp"
#include "sandpilion/graph.hpp"
#include "sandpilion/int_matrix.hpp"
#include "sandpilion/sandpile.hpp"

namespace sandpilion {

using Json = nlohmann::ordered_json;

/// {"vertices":[{"id":0,"role":"Path","index":1},...],"edges":[{"u":0,"v":1,"mult":1},...]}.
/// The apex is written without an index.
Json graph_to_json(const Multigraph& g);
/// Throws InvalidArgument on malformed input.
Multigraph graph_from_json(const Json& j);

/// Undirected DOT, one edge line per unit of multiplicity.
std::string graph_to_dot(const Multigraph& g, const std::string& name = "G");

/// {"rows":r,"cols":c,"entries":["..."]}, entries row-major as decimal strings.
Json matrix_to_json(const IntMatrix& m);
/// Entries may be decimal strings or JSON integers.
IntMatrix matrix_from_json(const Json& j);

Json decimal_array(const std::vector<BigInt>& values);
/// {"invariant_factors":[...],"order":"...","mu":n}
Json group_to_json(const AbelianGroup& group);
/// group_to_json of the expanded prediction plus "case".
Json prediction_to_json(const GroupPrediction& prediction);

}  // namespace sandpilion
