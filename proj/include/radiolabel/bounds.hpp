#pragma once

#include <map>
#include <string>

#include "radiolabel/graph.hpp"

namespace radiolabel {

enum class BoundMethod { TrivialVertexCount, EccentricityGap, GearForbidden };

std::string method_name(BoundMethod m);

struct BoundReport {
    int value = 0;
    BoundMethod method = BoundMethod::TrivialVertexCount;
    // GearForbidden only: forbidden values charged to each vertex.
    std::map<VertexId, int> per_vertex_forbidden;
};

// rn(G) >= |V(G)|: labels are distinct.
BoundReport lower_bound_trivial(const Graph& g);

// Sort vertices by label. Consecutive u, v need a gap of at least
// diam + 1 - d(u, v) >= 1 + max(slack(u), slack(v)), slack(u) = diam - ecc(u).
// Charging each gap to its left endpoint gives
//   span >= |V| + sum(slack) - max(slack).
// Sound for every connected graph, but blind to pairwise distance structure.
BoundReport lower_bound_ecc_gap(const Graph& g, const DistanceMatrix& dm);

// Forbidden-value count for the n-gear (n >= 4, diameter 4). The center
// forbids two values on each side of its label, each spoke one, each rim
// none. Placing the center at 1 and spoke v_n at the span leaves two
// forbidden values for the center, one for v_n and two for every other
// spoke: 2n + 1 forbidden values plus 2n + 1 labels.
// Keys follow the gear vertex layout of build().
BoundReport lower_bound_gear(int n);

}  // namespace radiolabel
