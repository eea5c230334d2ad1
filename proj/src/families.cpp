#include "radiolabel/families.hpp"

namespace radiolabel {

std::string family_name(Family f) {
    switch (f) {
    case Family::Complete: return "complete";
    case Family::Star: return "star";
    case Family::CompleteBipartite: return "complete_bipartite";
    case Family::Wheel: return "wheel";
    case Family::Gear: return "gear";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::Complete, Family::Star, Family::CompleteBipartite, Family::Wheel, Family::Gear})
        if (family_name(f) == name)
            return f;
    if (name == "bipartite")
        return Family::CompleteBipartite;
    throw Error(ErrorKind::InvalidParameter, "unknown family '" + name + "'");
}

std::string describe(const FamilySpec& spec) {
    if (spec.family == Family::CompleteBipartite)
        return family_name(spec.family) + "(" + std::to_string(spec.m) + "," + std::to_string(spec.n) + ")";
    return family_name(spec.family) + "(" + std::to_string(spec.n) + ")";
}

void validate(const FamilySpec& spec) {
    auto require = [&](int value, int minimum, const char* what) {
        if (value < minimum)
            throw Error(ErrorKind::InvalidParameter, family_name(spec.family) + " requires " + what +
                                                         " >= " + std::to_string(minimum) + ", got " +
                                                         std::to_string(value));
    };
    switch (spec.family) {
    case Family::Complete: require(spec.n, 1, "n"); break;
    case Family::Star: require(spec.n, 2, "n"); break;
    case Family::CompleteBipartite:
        require(spec.m, 1, "m");
        require(spec.n, 1, "n");
        break;
    case Family::Wheel: require(spec.n, 3, "n"); break;
    case Family::Gear: require(spec.n, 2, "n"); break;
    }
}

std::pair<int, int> gear_rim_spokes(int n, int i) {
    if (n % 2 == 1)
        return {i, i % n + 1};
    return {i == 1 ? n : i - 1, i};
}

namespace {

VertexId vid(int i) { return static_cast<VertexId>(i); }

Graph build_complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(vid(u), vid(v));
    return Graph(vid(n), std::move(edges));
}

Graph build_star(int n) {
    std::vector<Edge> edges;
    std::vector<Role> roles{Role::center()};
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, vid(i));
        roles.push_back(Role::spoke(i));
    }
    return Graph(vid(n + 1), std::move(edges), std::move(roles));
}

Graph build_complete_bipartite(int m, int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < m; ++u)
        for (int v = m; v < m + n; ++v)
            edges.emplace_back(vid(u), vid(v));
    return Graph(vid(m + n), std::move(edges));
}

Graph build_wheel(int n) {
    std::vector<Edge> edges;
    std::vector<Role> roles{Role::center()};
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, vid(i));
        edges.emplace_back(vid(i), vid(i % n + 1));
        roles.push_back(Role::spoke(i));
    }
    return Graph(vid(n + 1), std::move(edges), std::move(roles));
}

Graph build_gear(int n) {
    std::vector<Edge> edges;
    std::vector<Role> roles{Role::center()};
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, vid(i));
        roles.push_back(Role::spoke(i));
    }
    for (int i = 1; i <= n; ++i) {
        const VertexId w = vid(n + i);
        auto [a, b] = gear_rim_spokes(n, i);
        edges.emplace_back(w, vid(a));
        edges.emplace_back(w, vid(b));
        roles.push_back(Role::rim(i));
    }
    return Graph(vid(2 * n + 1), std::move(edges), std::move(roles));
}

}  // namespace

Graph build(const FamilySpec& spec) {
    validate(spec);
    switch (spec.family) {
    case Family::Complete: return build_complete(spec.n);
    case Family::Star: return build_star(spec.n);
    case Family::CompleteBipartite: return build_complete_bipartite(spec.m, spec.n);
    case Family::Wheel: return build_wheel(spec.n);
    case Family::Gear: return build_gear(spec.n);
    }
    throw Error(ErrorKind::InvalidParameter, "unknown family");
}

int family_radio_number(const FamilySpec& spec) {
    validate(spec);
    switch (spec.family) {
    case Family::Complete: return spec.n;
    case Family::Star: return spec.n + 2;
    case Family::CompleteBipartite:
        // K_{1,1} = K_2 has diameter 1.
        if (spec.m == 1 && spec.n == 1)
            return 2;
        return spec.m + spec.n + 1;
    case Family::Wheel:
        if (spec.n == 3)
            return 4;
        if (spec.n == 4)
            return 7;
        return spec.n + 2;
    case Family::Gear:
        if (spec.n < 4)
            throw Error(ErrorKind::NoClosedForm,
                        "no closed-form radio number for gear n=" + std::to_string(spec.n) +
                            " (closed form holds for n >= 4; use the exact solver)");
        return 4 * spec.n + 2;
    }
    throw Error(ErrorKind::InvalidParameter, "unknown family");
}

}  // namespace radiolabel
