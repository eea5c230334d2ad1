#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "radiolabel/families.hpp"
#include "radiolabel/graph.hpp"

using namespace radiolabel;

namespace {

void require_error(ErrorKind kind, auto&& fn) {
    try {
        fn();
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == kind);
    }
}

std::vector<FamilySpec> sample_families() {
    std::vector<FamilySpec> out;
    for (int n = 1; n <= 9; ++n)
        out.push_back(FamilySpec::complete(n));
    for (int n = 2; n <= 12; ++n)
        out.push_back(FamilySpec::star(n));
    for (int m = 1; m <= 4; ++m)
        for (int n = m; n <= 6; ++n)
            out.push_back(FamilySpec::complete_bipartite(m, n));
    for (int n = 3; n <= 16; ++n)
        out.push_back(FamilySpec::wheel(n));
    for (int n = 2; n <= 20; ++n)
        out.push_back(FamilySpec::gear(n));
    return out;
}

}  // namespace

TEST_CASE("all_pairs_distances on K4") {
    const Graph k4 = build(FamilySpec::complete(4));
    const auto dm = all_pairs_distances(k4);
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = 0; v < 4; ++v)
            CHECK(dm(u, v) == (u == v ? 0 : 1));
    CHECK(dm.diameter() == 1);
}

TEST_CASE("all_pairs_distances on a single edge") {
    const Graph g(2, {{0, 1}});
    const auto dm = all_pairs_distances(g);
    CHECK(dm(0, 1) == 1);
    CHECK(dm(1, 0) == 1);
    CHECK(dm.diameter() == 1);
}

TEST_CASE("gear eccentricities by role") {
    const Graph g = build(FamilySpec::gear(8));
    CHECK(all_pairs_distances(g).diameter() == 4);
    CHECK(eccentricity(g, g.vertex_with_role(Role::center())) == 2);
    for (int i = 1; i <= 8; ++i) {
        CHECK(eccentricity(g, g.vertex_with_role(Role::spoke(i))) == 3);
        CHECK(eccentricity(g, g.vertex_with_role(Role::rim(i))) == 4);
    }
}

TEST_CASE("disconnected graph is a hard error") {
    try {
        Graph g(4, {{0, 1}, {2, 3}});
        FAIL("disconnected graph accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DisconnectedGraph);
        CHECK(std::string(e.what()).find("unreachable") != std::string::npos);
    }
}

TEST_CASE("graph construction rejects malformed input") {
    require_error(ErrorKind::InvalidGraph, [] { Graph g(2, {{0, 0}, {0, 1}}); });
    require_error(ErrorKind::InvalidGraph, [] { Graph g(2, {{0, 1}, {1, 0}}); });
    require_error(ErrorKind::InvalidVertex, [] { Graph g(2, {{0, 2}}); });
    require_error(ErrorKind::InvalidGraph, [] { Graph g(0, {}); });
    require_error(ErrorKind::InvalidGraph, [] { Graph g(2, {{0, 1}}, {Role::center(), Role::center()}); });
    require_error(ErrorKind::InvalidGraph, [] { Graph g(2, {{0, 1}}, {Role::center()}); });
    require_error(ErrorKind::InvalidGraph, [] { Graph g(2, {{0, 1}}, {Role::center(), Role::spoke(0)}); });

    const Graph ok(2, {{0, 1}});
    require_error(ErrorKind::InvalidVertex, [&] { (void)eccentricity(ok, 2); });
    require_error(ErrorKind::InvalidVertex, [&] { (void)ok.vertex_with_role(Role::rim(1)); });
}

TEST_CASE("single vertex graph") {
    const Graph g(1, {});
    CHECK(g.diameter() == 0);
    CHECK(eccentricity(g, 0) == 0);
}

TEST_CASE("role names round-trip") {
    for (Role r : {Role::center(), Role::spoke(3), Role::rim(12), Role::plain(1)})
        CHECK(parse_role(role_name(r)) == r);
    CHECK(parse_role("center") == Role::center());
    require_error(ErrorKind::Parse, [] { (void)parse_role("x1"); });
    require_error(ErrorKind::Parse, [] { (void)parse_role("v0"); });
    require_error(ErrorKind::Parse, [] { (void)parse_role("v1a"); });
}

TEST_CASE("family distance matrices agree with Floyd-Warshall") {
    for (const auto& spec : sample_families()) {
        CAPTURE(describe(spec));
        const Graph g = build(spec);
        const auto& dm = g.distances();
        const auto ref = oracle::distances(g.vertex_count(), g.edges());
        const std::size_t n = g.vertex_count();
        for (VertexId u = 0; u < n; ++u) {
            CHECK(dm(u, u) == 0);
            for (VertexId v = 0; v < n; ++v) {
                CHECK(dm(u, v) == ref[u][v]);
                CHECK(dm(u, v) == dm(v, u));
                for (VertexId w = 0; w < n; ++w)
                    CHECK(dm(u, w) <= dm(u, v) + dm(v, w));
            }
            CHECK(dm.eccentricity(u) == *std::max_element(ref[u].begin(), ref[u].end()));
        }
        CHECK(dm.diameter() == oracle::diameter(ref));
    }
}

TEST_CASE("shuffled edge order yields the identical matrix") {
    std::mt19937 rng(7);
    for (const auto& spec : sample_families()) {
        const Graph g = build(spec);
        auto edges = g.edges();
        std::shuffle(edges.begin(), edges.end(), rng);
        for (auto& e : edges)
            if (rng() % 2)
                std::swap(e.first, e.second);
        const Graph h(g.vertex_count(), edges, g.roles());
        CHECK(h.distances() == g.distances());
        CHECK(all_pairs_distances(h) == g.distances());
    }
}

TEST_CASE("family diameters") {
    for (int n = 4; n <= 64; ++n)
        CHECK(build(FamilySpec::gear(n)).diameter() == 4);
    for (int n = 4; n <= 40; ++n)
        CHECK(build(FamilySpec::wheel(n)).diameter() == 2);
    for (int n = 2; n <= 40; ++n)
        CHECK(build(FamilySpec::star(n)).diameter() == 2);
    for (int n = 2; n <= 20; ++n)
        CHECK(build(FamilySpec::complete(n)).diameter() == 1);
}
