#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "radiolabel/constructive.hpp"
#include "radiolabel/radio.hpp"

using namespace radiolabel;

TEST_CASE("consecutive labels on K4 are valid") {
    const Graph g = build(FamilySpec::complete(4));
    CHECK(check(g, Labeling({1, 2, 3, 4})).empty());
}

TEST_CASE("star center next to a leaf label is a violation") {
    const Graph g = build(FamilySpec::star(3));
    const auto violations = check(g, Labeling({1, 2, 3, 4}));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == Violation{0, 1, 1, 1, 3});
}

TEST_CASE("gear construction on G9 is valid") {
    const Graph g = build(FamilySpec::gear(9));
    CHECK(check(g, label_gear(g)).empty());
}

TEST_CASE("span") {
    const Graph g8 = build(FamilySpec::gear(8));
    CHECK(span(label_gear(g8)) == 34);
    CHECK(span(Labeling({1})) == 1);
    CHECK(span(label_wheel(5)) == 7);
    CHECK_THROWS_AS(span(Labeling{}), Error);
}

TEST_CASE("malformed labelings are errors, not violations") {
    const Graph g = build(FamilySpec::star(3));
    auto kind_of = [&](const Labeling& c) {
        try {
            (void)check(g, c);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;
    };
    CHECK(kind_of(Labeling({1, 3, 4})) == ErrorKind::InvalidLabeling);
    CHECK(kind_of(Labeling({1, 3, 4, 5, 6})) == ErrorKind::InvalidLabeling);
    CHECK(kind_of(Labeling({1, 3, 3, 5})) == ErrorKind::InvalidLabeling);
    CHECK(kind_of(Labeling({0, 3, 4, 5})) == ErrorKind::InvalidLabeling);
    CHECK(kind_of(Labeling({-2, 3, 4, 5})) == ErrorKind::InvalidLabeling);
}

TEST_CASE("fail_fast stops at the first violation") {
    const Graph g = build(FamilySpec::gear(5));
    Labeling c({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    const auto all = check(g, g.distances(), c);
    const auto first = check(g, g.distances(), c, true);
    REQUIRE(all.size() > 1);
    REQUIRE(first.size() == 1);
    CHECK(first[0] == all[0]);
}

TEST_CASE("check agrees with the pairwise oracle on random labelings") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng() % 7;
        const auto edges = oracle::random_connected(n, 0.3, rng);
        const Graph g(n, edges);
        const auto ref = oracle::distances(n, edges);

        std::vector<Label> pool(3 * n);
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<Label> labels(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
        const Labeling c(labels);

        const auto violations = check(g, c);
        CHECK(violations.empty() == oracle::is_radio(ref, labels));
        for (const auto& v : violations) {
            CHECK(v.u < v.v);
            CHECK(v.distance == ref[v.u][v.v]);
            CHECK(v.label_gap == std::abs(labels[v.u] - labels[v.v]));
            CHECK(v.distance + v.label_gap < v.required);
        }

        // Relabeling the vertices (swap two ids) permutes the report only.
        std::vector<VertexId> perm(n);
        std::iota(perm.begin(), perm.end(), VertexId{0});
        std::swap(perm[0], perm[n - 1]);
        std::vector<Edge> pedges;
        for (auto [a, b] : edges)
            pedges.emplace_back(perm[a], perm[b]);
        std::vector<Label> plabels(n);
        for (VertexId v = 0; v < n; ++v)
            plabels[perm[v]] = labels[v];
        CHECK(check(Graph(n, pedges), Labeling(plabels)).size() == violations.size());
    }
}

TEST_CASE("translation preserves validity of gear labelings") {
    for (int n = 4; n <= 20; ++n) {
        const Graph g = build(FamilySpec::gear(n));
        const Labeling c = label_gear(g);
        REQUIRE(check(g, c).empty());
        for (int k : {1, 5}) {
            Labeling shifted = c;
            for (VertexId v = 0; v < shifted.size(); ++v)
                shifted[v] += k;
            CHECK(check(g, shifted).empty());
            CHECK(span(shifted) == span(c) + k);
        }
    }
}

TEST_CASE("moving the center label from 1 to 3 breaks the gear construction") {
    for (int n = 7; n <= 20; ++n) {
        const Graph g = build(FamilySpec::gear(n));
        Labeling c = label_gear(g);
        const VertexId z = g.vertex_with_role(Role::center());
        const VertexId w1 = g.vertex_with_role(Role::rim(1));
        REQUIRE(c[z] == 1);
        REQUIRE(c[w1] == 4);
        c[z] = 3;
        const auto violations = check(g, c);
        REQUIRE_FALSE(violations.empty());
        const bool against_w1 = std::any_of(violations.begin(), violations.end(), [&](const Violation& v) {
            return std::minmax(v.u, v.v) == std::minmax(z, w1) && v.distance == 2 && v.label_gap == 1;
        });
        CHECK(against_w1);
    }
}
