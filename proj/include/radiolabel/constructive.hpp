#pragma once

#include <array>
#include <span>
#include <vector>

#include "radiolabel/families.hpp"
#include "radiolabel/radio.hpp"

namespace radiolabel {

// Labelings below are keyed by the vertex layout documented on build().
Labeling label_complete(int n);
Labeling label_star(int n);
Labeling label_complete_bipartite(int m, int n);
Labeling label_wheel(int n);

// The renaming of gear vertices to positions 0..2n:
//   z -> 0, v_i -> n + i, and the rims fill 1..n in the order
//   w_1, w_3, w_5, ..., then w_2, w_4, ...
struct PositionAssignment {
    std::vector<int> position;          // by VertexId
    std::vector<VertexId> at_position;  // inverse

    int operator()(VertexId v) const { return position[v]; }
    VertexId vertex(int p) const { return at_position[static_cast<std::size_t>(p)]; }
};

// Gear order n recognised from the roles and edges of g. Throws NotAGear.
int gear_order(const Graph& g);

PositionAssignment gear_positions(const Graph& g);

// Label of position i under the gear construction for order n:
// 1 at 0, 3 + i on 1..n, n + 2 + 3(i - n) on n+1..2n.
Label gear_position_label(int n, int i);

// Smallest gear order served by the position-based construction.
inline constexpr int kGearConstructionMin = 7;

// Span-(4n+2) radio labeling of the gear g. Uses the position construction
// for n >= 7 and stored exact-search labelings for 4 <= n <= 6. Throws
// NoConstruction for n <= 3.
Labeling label_gear(const Graph& g);

// Stored labeling for gear order 4..6, as labels of (z, v_1..v_n, w_1..w_n).
// Throws NoConstruction for other orders.
std::span<const Label> stored_gear_labels(int n);

// Dispatches to the labeler for spec's family.
Labeling label_family(const FamilySpec& spec);

}  // namespace radiolabel
