#include "radiolabel/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <queue>
#include <set>

namespace radiolabel {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidGraph: return "invalid graph";
    case ErrorKind::DisconnectedGraph: return "disconnected graph";
    case ErrorKind::InvalidVertex: return "invalid vertex";
    case ErrorKind::InvalidParameter: return "invalid parameter";
    case ErrorKind::InvalidLabeling: return "invalid labeling";
    case ErrorKind::NoClosedForm: return "no closed form";
    case ErrorKind::NoConstruction: return "no construction";
    case ErrorKind::NotAGear: return "not a gear";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Io: return "io error";
    }
    return "error";
}

std::string role_name(const Role& role) {
    switch (role.kind) {
    case RoleKind::Center: return "z";
    case RoleKind::Spoke: return "v" + std::to_string(role.index);
    case RoleKind::Rim: return "w" + std::to_string(role.index);
    case RoleKind::Plain: return "p" + std::to_string(role.index);
    }
    return "?";
}

Role parse_role(const std::string& name) {
    if (name == "z" || name == "center")
        return Role::center();
    if (name.size() >= 2) {
        int index = 0;
        const char* first = name.data() + 1;
        const char* last = name.data() + name.size();
        auto [ptr, ec] = std::from_chars(first, last, index);
        if (ec == std::errc{} && ptr == last && index >= 1) {
            switch (name[0]) {
            case 'v': return Role::spoke(index);
            case 'w': return Role::rim(index);
            case 'p': return Role::plain(index);
            default: break;
            }
        }
    }
    throw Error(ErrorKind::Parse, "unrecognised role '" + name + "'");
}

namespace {

std::vector<std::vector<int>> bfs_all(const std::vector<std::vector<VertexId>>& adjacency) {
    const std::size_t n = adjacency.size();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (VertexId root = 0; root < n; ++root) {
        auto& d = dist[root];
        std::queue<VertexId> frontier;
        d[root] = 0;
        frontier.push(root);
        while (!frontier.empty()) {
            VertexId u = frontier.front();
            frontier.pop();
            for (VertexId w : adjacency[u]) {
                if (d[w] == -1) {
                    d[w] = d[u] + 1;
                    frontier.push(w);
                }
            }
        }
        for (VertexId v = 0; v < n; ++v)
            if (d[v] == -1)
                throw Error(ErrorKind::DisconnectedGraph,
                            "graph is disconnected: vertex " + std::to_string(v) +
                                " is unreachable from vertex " + std::to_string(root));
    }
    return dist;
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::vector<std::vector<int>> dist) : dist_(std::move(dist)) {
    ecc_.reserve(dist_.size());
    for (const auto& row : dist_) {
        int e = row.empty() ? 0 : *std::max_element(row.begin(), row.end());
        ecc_.push_back(e);
        diameter_ = std::max(diameter_, e);
    }
}

Graph::Graph(std::size_t n_vertices, std::vector<Edge> edges, std::vector<Role> roles) {
    if (n_vertices == 0)
        throw Error(ErrorKind::InvalidGraph, "graph must have at least one vertex");

    for (auto& [u, v] : edges) {
        if (u >= n_vertices || v >= n_vertices)
            throw Error(ErrorKind::InvalidVertex,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") references a vertex outside 0.." + std::to_string(n_vertices - 1));
        if (u == v)
            throw Error(ErrorKind::InvalidGraph, "self-loop on vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw Error(ErrorKind::InvalidGraph, "duplicate edge (" + std::to_string(dup->first) + "," +
                                                 std::to_string(dup->second) + ")");
    edges_ = std::move(edges);

    adjacency_.resize(n_vertices);
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nb : adjacency_)
        std::sort(nb.begin(), nb.end());

    if (roles.empty()) {
        roles.reserve(n_vertices);
        for (std::size_t i = 0; i < n_vertices; ++i)
            roles.push_back(Role::plain(static_cast<int>(i) + 1));
    }
    if (roles.size() != n_vertices)
        throw Error(ErrorKind::InvalidGraph, "role map covers " + std::to_string(roles.size()) +
                                                 " of " + std::to_string(n_vertices) + " vertices");
    std::set<Role> seen;
    for (const auto& r : roles) {
        if (r.kind != RoleKind::Center && r.index < 1)
            throw Error(ErrorKind::InvalidGraph, "role indices are 1-based");
        if (r.kind == RoleKind::Center && r.index != 0)
            throw Error(ErrorKind::InvalidGraph, "center role carries no index");
        if (!seen.insert(r).second)
            throw Error(ErrorKind::InvalidGraph, "role " + role_name(r) + " assigned twice");
    }
    roles_ = std::move(roles);

    distances_ = DistanceMatrix(bfs_all(adjacency_));
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    if (v >= vertex_count())
        throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
    return adjacency_[v];
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

const Role& Graph::role(VertexId v) const {
    if (v >= vertex_count())
        throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
    return roles_[v];
}

VertexId Graph::vertex_with_role(const Role& role) const {
    auto it = std::find(roles_.begin(), roles_.end(), role);
    if (it == roles_.end())
        throw Error(ErrorKind::InvalidVertex, "no vertex has role " + role_name(role));
    return static_cast<VertexId>(it - roles_.begin());
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    std::vector<std::vector<VertexId>> adjacency(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        adjacency[v].assign(nb.begin(), nb.end());
    }
    return DistanceMatrix(bfs_all(adjacency));
}

int eccentricity(const Graph& g, VertexId u) {
    if (u >= g.vertex_count())
        throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(u) + " out of range");
    return g.distances().eccentricity(u);
}

}  // namespace radiolabel
