#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radiolabel/error.hpp"

namespace radiolabel {

// Dense 0-based vertex index into the owning graph.
using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

enum class RoleKind { Center, Spoke, Rim, Plain };

// Structural role of a vertex. `index` is 1-based for Spoke/Rim/Plain
// (v_i, w_i, p_i) and 0 for the Center.
struct Role {
    RoleKind kind = RoleKind::Plain;
    int index = 0;

    static Role center() { return {RoleKind::Center, 0}; }
    static Role spoke(int i) { return {RoleKind::Spoke, i}; }
    static Role rim(int i) { return {RoleKind::Rim, i}; }
    static Role plain(int i) { return {RoleKind::Plain, i}; }

    friend bool operator==(const Role&, const Role&) = default;
    friend auto operator<=>(const Role&, const Role&) = default;
};

// "z", "v3", "w1", "p7".
std::string role_name(const Role& role);
Role parse_role(const std::string& name);

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::vector<std::vector<int>> dist);

    std::size_t size() const { return dist_.size(); }
    int operator()(VertexId u, VertexId v) const { return dist_[u][v]; }
    std::span<const int> row(VertexId u) const { return dist_[u]; }
    int eccentricity(VertexId u) const { return ecc_[u]; }
    const std::vector<int>& eccentricities() const { return ecc_; }
    int diameter() const { return diameter_; }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::vector<std::vector<int>> dist_;
    std::vector<int> ecc_;
    int diameter_ = 0;
};

// Immutable simple connected graph. Construction validates the edge list and
// role map, then computes all-pairs distances once.
class Graph {
public:
    // Roles default to Plain(1..n) when `roles` is empty.
    Graph(std::size_t n_vertices, std::vector<Edge> edges, std::vector<Role> roles = {});

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Normalised (u < v), sorted.
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const VertexId> neighbors(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;

    const Role& role(VertexId v) const;
    const std::vector<Role>& roles() const { return roles_; }
    // Throws InvalidVertex when no vertex carries the role.
    VertexId vertex_with_role(const Role& role) const;

    const DistanceMatrix& distances() const { return distances_; }
    int diameter() const { return distances_.diameter(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<Role> roles_;
    DistanceMatrix distances_;
};

// BFS from every vertex. Throws DisconnectedGraph naming one unreachable pair.
DistanceMatrix all_pairs_distances(const Graph& g);

int eccentricity(const Graph& g, VertexId u);

}  // namespace radiolabel
