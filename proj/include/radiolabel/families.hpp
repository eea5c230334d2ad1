#pragma once

#include <optional>
#include <string>

#include "radiolabel/graph.hpp"

namespace radiolabel {

enum class Family { Complete, Star, CompleteBipartite, Wheel, Gear };

std::string family_name(Family f);
// Accepts the names produced by family_name ("complete", "star",
// "complete_bipartite", "wheel", "gear"). Throws InvalidParameter.
Family parse_family(const std::string& name);

struct FamilySpec {
    Family family = Family::Complete;
    int n = 1;
    int m = 0;  // CompleteBipartite only

    static FamilySpec complete(int n) { return {Family::Complete, n, 0}; }
    static FamilySpec star(int n) { return {Family::Star, n, 0}; }
    static FamilySpec complete_bipartite(int m, int n) { return {Family::CompleteBipartite, n, m}; }
    static FamilySpec wheel(int n) { return {Family::Wheel, n, 0}; }
    static FamilySpec gear(int n) { return {Family::Gear, n, 0}; }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// "gear(9)", "complete_bipartite(2,3)".
std::string describe(const FamilySpec& spec);

// Throws InvalidParameter naming the violated minimum.
void validate(const FamilySpec& spec);

// Vertex layout of the built graphs:
//   Complete           0..n-1 = p1..pn
//   Star, Wheel        0 = z, 1..n = v1..vn
//   CompleteBipartite  0..m-1 = p1..pm, m..m+n-1 = p(m+1)..p(m+n)
//   Gear               0 = z, 1..n = v1..vn, n+1..2n = w1..wn
// Gear rim orientation: for odd n, w_i touches v_i and v_{i+1}; for even n,
// w_i touches v_{i-1} and v_i (so w_1 touches v_1 and v_n).
Graph build(const FamilySpec& spec);

// Closed-form radio number. Throws NoClosedForm for gears with n < 4.
int family_radio_number(const FamilySpec& spec);

// Spokes adjacent to rim w_i in the gear layout above, 1-based.
std::pair<int, int> gear_rim_spokes(int n, int i);

}  // namespace radiolabel
