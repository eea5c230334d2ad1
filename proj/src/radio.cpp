#include "radiolabel/radio.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

namespace radiolabel {

void require_well_formed(const Graph& g, const Labeling& c) {
    if (c.size() != g.vertex_count())
        throw Error(ErrorKind::InvalidLabeling, "labeling covers " + std::to_string(c.size()) + " of " +
                                                    std::to_string(g.vertex_count()) + " vertices");
    std::unordered_map<Label, VertexId> owner;
    for (VertexId v = 0; v < c.size(); ++v) {
        if (c[v] < 1)
            throw Error(ErrorKind::InvalidLabeling,
                        "vertex " + std::to_string(v) + " has non-positive label " + std::to_string(c[v]));
        auto [it, inserted] = owner.emplace(c[v], v);
        if (!inserted)
            throw Error(ErrorKind::InvalidLabeling, "label " + std::to_string(c[v]) + " used by vertices " +
                                                        std::to_string(it->second) + " and " +
                                                        std::to_string(v));
    }
}

std::vector<Violation> check(const Graph& g, const DistanceMatrix& dm, const Labeling& c, bool fail_fast) {
    require_well_formed(g, c);
    if (dm.size() != g.vertex_count())
        throw Error(ErrorKind::InvalidGraph, "distance matrix does not match graph");

    const int required = dm.diameter() + 1;
    std::vector<Violation> out;
    for (VertexId u = 0; u < c.size(); ++u) {
        for (VertexId v = u + 1; v < c.size(); ++v) {
            const int gap = std::abs(c[u] - c[v]);
            if (dm(u, v) + gap < required) {
                out.push_back({u, v, dm(u, v), gap, required});
                if (fail_fast)
                    return out;
            }
        }
    }
    return out;
}

std::vector<Violation> check(const Graph& g, const Labeling& c) {
    return check(g, g.distances(), c);
}

bool is_radio_labeling(const Graph& g, const Labeling& c) {
    return check(g, g.distances(), c, true).empty();
}

Label span(const Labeling& c) {
    if (c.empty())
        throw Error(ErrorKind::InvalidLabeling, "span of an empty labeling");
    return *std::max_element(c.values().begin(), c.values().end());
}

}  // namespace radiolabel
