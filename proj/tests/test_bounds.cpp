#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "radiolabel/bounds.hpp"
#include "radiolabel/families.hpp"

using namespace radiolabel;

namespace {

// |V| + sum(diam - ecc) - max(diam - ecc), from Floyd-Warshall eccentricities.
int ecc_gap_oracle(std::size_t n, const std::vector<Edge>& edges) {
    const auto d = oracle::distances(n, edges);
    const int diam = oracle::diameter(d);
    int total = 0;
    int largest = 0;
    for (const auto& row : d) {
        const int slack = diam - *std::max_element(row.begin(), row.end());
        total += slack;
        largest = std::max(largest, slack);
    }
    return static_cast<int>(n) + total - largest;
}

}  // namespace

TEST_CASE("trivial bound") {
    CHECK(lower_bound_trivial(build(FamilySpec::complete(4))).value == 4);
    CHECK(lower_bound_trivial(build(FamilySpec::gear(8))).value == 17);
    CHECK(lower_bound_trivial(build(FamilySpec::star(5))).value == 6);
    CHECK(lower_bound_trivial(build(FamilySpec::star(5))).method == BoundMethod::TrivialVertexCount);
}

TEST_CASE("eccentricity gap bound") {
    const Graph g8 = build(FamilySpec::gear(8));
    // ecc: center 2, spokes 3, rims 4 -> 17 + (2 + 8*1 + 0) - 2.
    CHECK(ecc_gap_oracle(g8.vertex_count(), g8.edges()) == 25);
    CHECK(lower_bound_ecc_gap(g8, g8.distances()).value == 25);
    CHECK(lower_bound_ecc_gap(g8, g8.distances()).method == BoundMethod::EccentricityGap);
    for (int n = 1; n <= 10; ++n) {
        const Graph k = build(FamilySpec::complete(n));
        CHECK(lower_bound_ecc_gap(k, k.distances()).value == n);
    }
    const Graph s5 = build(FamilySpec::star(5));
    CHECK(lower_bound_ecc_gap(s5, s5.distances()).value == 6);
}

TEST_CASE("gear forbidden-value bound") {
    const auto r8 = lower_bound_gear(8);
    CHECK(r8.value == 34);
    CHECK(r8.method == BoundMethod::GearForbidden);
    int forbidden = 0;
    for (const auto& [v, k] : r8.per_vertex_forbidden)
        forbidden += k;
    CHECK(forbidden == 17);
    CHECK(r8.per_vertex_forbidden.size() == 17);

    const Graph g = build(FamilySpec::gear(8));
    for (const auto& [v, k] : r8.per_vertex_forbidden) {
        const Role r = g.role(v);
        if (r.kind == RoleKind::Center)
            CHECK(k == 2);
        else if (r.kind == RoleKind::Rim)
            CHECK(k == 0);
        else
            CHECK(k == (r.index == 8 ? 1 : 2));
    }

    CHECK(lower_bound_gear(4).value == 18);
    CHECK(lower_bound_gear(100).value == 402);
    for (int n : {1, 2, 3}) {
        try {
            (void)lower_bound_gear(n);
            FAIL("gear bound accepted n=" << n);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidParameter);
            CHECK(std::string(e.what()).find("diameter") != std::string::npos);
        }
    }
}

TEST_CASE("bound ordering on gears") {
    for (int n = 4; n <= 64; ++n) {
        const Graph g = build(FamilySpec::gear(n));
        const int trivial = lower_bound_trivial(g).value;
        const int ecc = lower_bound_ecc_gap(g, g.distances()).value;
        CHECK(ecc == ecc_gap_oracle(g.vertex_count(), g.edges()));
        CHECK(ecc >= trivial);
        CHECK(lower_bound_gear(n).value >= ecc);
        CHECK(lower_bound_gear(n).value == 4 * n + 2);
    }
}

TEST_CASE("generic bounds are sound against brute force on random graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + rng() % 5;
        const auto edges = oracle::random_connected(n, 0.35, rng);
        const Graph g(n, edges);
        const int rn = oracle::radio_number(oracle::distances(n, edges));
        const int trivial = lower_bound_trivial(g).value;
        const int ecc = lower_bound_ecc_gap(g, g.distances()).value;
        CHECK(ecc >= trivial);
        CHECK(ecc <= rn);
        CHECK(ecc == ecc_gap_oracle(n, edges));
    }
}
