#include "radiolabel/constructive.hpp"

#include <algorithm>
#include <set>

namespace radiolabel {

Labeling label_complete(int n) {
    validate(FamilySpec::complete(n));
    std::vector<Label> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        labels[static_cast<std::size_t>(i)] = i + 1;
    return Labeling(std::move(labels));
}

Labeling label_star(int n) {
    validate(FamilySpec::star(n));
    std::vector<Label> labels{1};
    for (int i = 1; i <= n; ++i)
        labels.push_back(i + 2);
    return Labeling(std::move(labels));
}

Labeling label_complete_bipartite(int m, int n) {
    validate(FamilySpec::complete_bipartite(m, n));
    std::vector<Label> labels;
    for (int i = 1; i <= m; ++i)
        labels.push_back(i);
    for (int i = 1; i <= n; ++i)
        labels.push_back(m + 1 + i);
    return Labeling(std::move(labels));
}

Labeling label_wheel(int n) {
    validate(FamilySpec::wheel(n));
    if (n == 3)
        return label_complete(4);
    if (n == 4)
        return Labeling({1, 3, 6, 4, 7});

    std::vector<Label> labels{1};
    const int half = (n + 1) / 2;
    for (int i = 1; i <= half; ++i)
        labels.push_back(2 * i + 1);
    for (int i = half + 1; i <= n; ++i)
        labels.push_back(2 * (i - half) + 2);
    return Labeling(std::move(labels));
}

int gear_order(const Graph& g) {
    auto fail = [](const std::string& why) -> int { throw Error(ErrorKind::NotAGear, "graph is not a gear: " + why); };

    int spokes = 0;
    int rims = 0;
    int centers = 0;
    for (const auto& r : g.roles()) {
        switch (r.kind) {
        case RoleKind::Center: ++centers; break;
        case RoleKind::Spoke: ++spokes; break;
        case RoleKind::Rim: ++rims; break;
        case RoleKind::Plain: return fail("vertex with plain role");
        }
    }
    const int n = spokes;
    if (centers != 1 || rims != n || n < 2)
        return fail("expected one center and matching spoke/rim counts");
    for (const auto& r : g.roles())
        if (r.index > n)
            return fail("role index " + role_name(r) + " exceeds n=" + std::to_string(n));

    std::set<std::pair<Role, Role>> expected;
    auto add = [&](Role a, Role b) { expected.insert(std::minmax(a, b)); };
    for (int i = 1; i <= n; ++i) {
        add(Role::center(), Role::spoke(i));
        auto [a, b] = gear_rim_spokes(n, i);
        add(Role::rim(i), Role::spoke(a));
        add(Role::rim(i), Role::spoke(b));
    }
    std::set<std::pair<Role, Role>> actual;
    for (const auto& [u, v] : g.edges())
        actual.insert(std::minmax(g.role(u), g.role(v)));
    if (actual != expected)
        return fail("edges do not follow the gear rim orientation for n=" + std::to_string(n));
    return n;
}

PositionAssignment gear_positions(const Graph& g) {
    const int n = gear_order(g);
    PositionAssignment p;
    p.position.assign(g.vertex_count(), -1);
    p.at_position.assign(g.vertex_count(), 0);

    auto place = [&](Role role, int pos) {
        const VertexId v = g.vertex_with_role(role);
        p.position[v] = pos;
        p.at_position[static_cast<std::size_t>(pos)] = v;
    };

    place(Role::center(), 0);
    const int odd_rims = (n + 1) / 2;  // w_1, w_3, ...
    for (int i = 1; 2 * i - 1 <= n; ++i)
        place(Role::rim(2 * i - 1), i);
    for (int i = 1; 2 * i <= n; ++i)
        place(Role::rim(2 * i), odd_rims + i);
    for (int i = 1; i <= n; ++i)
        place(Role::spoke(i), n + i);
    return p;
}

Label gear_position_label(int n, int i) {
    if (i < 0 || i > 2 * n)
        throw Error(ErrorKind::InvalidParameter, "position " + std::to_string(i) + " outside 0.." + std::to_string(2 * n));
    if (i == 0)
        return 1;
    if (i <= n)
        return 3 + i;
    return n + 2 + 3 * (i - n);
}

Labeling label_gear(const Graph& g) {
    const int n = gear_order(g);
    std::vector<Label> labels(g.vertex_count());
    if (n >= kGearConstructionMin) {
        const auto p = gear_positions(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            labels[v] = gear_position_label(n, p(v));
        return Labeling(std::move(labels));
    }
    if (n < 4)
        throw Error(ErrorKind::NoConstruction,
                    "no gear construction for n=" + std::to_string(n) + " (available for n >= 4)");

    const auto stored = stored_gear_labels(n);
    labels[g.vertex_with_role(Role::center())] = stored[0];
    for (int i = 1; i <= n; ++i) {
        labels[g.vertex_with_role(Role::spoke(i))] = stored[static_cast<std::size_t>(i)];
        labels[g.vertex_with_role(Role::rim(i))] = stored[static_cast<std::size_t>(n + i)];
    }
    return Labeling(std::move(labels));
}

Labeling label_family(const FamilySpec& spec) {
    switch (spec.family) {
    case Family::Complete: return label_complete(spec.n);
    case Family::Star: return label_star(spec.n);
    case Family::CompleteBipartite: return label_complete_bipartite(spec.m, spec.n);
    case Family::Wheel: return label_wheel(spec.n);
    case Family::Gear: return label_gear(build(spec));
    }
    throw Error(ErrorKind::InvalidParameter, "unknown family");
}

}  // namespace radiolabel
