#include "radiolabel/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace radiolabel {

std::string method_name(BoundMethod m) {
    switch (m) {
    case BoundMethod::TrivialVertexCount: return "trivial";
    case BoundMethod::EccentricityGap: return "ecc";
    case BoundMethod::GearForbidden: return "gear";
    }
    return "?";
}

BoundReport lower_bound_trivial(const Graph& g) {
    return {static_cast<int>(g.vertex_count()), BoundMethod::TrivialVertexCount, {}};
}

BoundReport lower_bound_ecc_gap(const Graph& g, const DistanceMatrix& dm) {
    if (dm.size() != g.vertex_count())
        throw Error(ErrorKind::InvalidGraph, "distance matrix does not match graph");
    int total = 0;
    int largest = 0;
    for (int e : dm.eccentricities()) {
        const int slack = dm.diameter() - e;
        total += slack;
        largest = std::max(largest, slack);
    }
    return {static_cast<int>(g.vertex_count()) + total - largest, BoundMethod::EccentricityGap, {}};
}

BoundReport lower_bound_gear(int n) {
    if (n < 4)
        throw Error(ErrorKind::InvalidParameter,
                    "gear forbidden-value bound needs n >= 4 (diameter hypothesis fails for n=" +
                        std::to_string(n) + ")");
    BoundReport report;
    report.method = BoundMethod::GearForbidden;
    report.per_vertex_forbidden[0] = 2;
    for (int i = 1; i <= n; ++i)
        report.per_vertex_forbidden[static_cast<VertexId>(i)] = (i == n) ? 1 : 2;
    for (int i = 1; i <= n; ++i)
        report.per_vertex_forbidden[static_cast<VertexId>(n + i)] = 0;

    int forbidden = 0;
    for (const auto& [v, count] : report.per_vertex_forbidden)
        forbidden += count;
    report.value = (2 * n + 1) + forbidden;
    return report;
}

}  // namespace radiolabel
