#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "radiolabel/graph.hpp"
#include "radiolabel/radio.hpp"

namespace radiolabel {

struct SolverConfig {
    std::optional<std::uint64_t> node_budget;
    std::optional<std::chrono::milliseconds> time_budget;
    // First span tried by solve(). Defaults to the best generic lower bound
    // (trivial vertex count or eccentricity gap).
    std::optional<int> start_span;
    // Restricts the first-ordered vertex to the lower half of [1, s] using
    // the reversal c -> s + 1 - c.
    bool symmetry_breaking = true;
    // Workers > 1 split the first vertex's candidate labels across threads.
    unsigned workers = 1;
};

// Throws InvalidParameter on a zero budget, a zero worker count or a
// non-positive start span.
void validate(const SolverConfig& cfg);

struct SolveStats {
    std::uint64_t nodes_explored = 0;
    std::uint64_t spans_tried = 0;
    std::chrono::nanoseconds wall_time{0};
};

enum class SolveStatus { Solved, Inconclusive };

struct SolveResult {
    SolveStatus status = SolveStatus::Inconclusive;
    // Solved: lower_bound == upper_bound == rn, and span rn - 1 was
    // exhaustively refuted (or is below |V|). Inconclusive: the proven
    // interval [lower_bound, upper_bound]; upper_bound absent when no
    // labeling was found.
    int lower_bound = 0;
    std::optional<int> upper_bound;
    std::optional<Labeling> witness;
    SolveStats stats;

    bool solved() const { return status == SolveStatus::Solved; }
    int rn() const;  // throws InvalidParameter unless solved
};

enum class Feasibility { Found, None, Inconclusive };

struct FeasibilityResult {
    Feasibility status = Feasibility::Inconclusive;
    std::optional<Labeling> labeling;  // Found only; span <= s
    SolveStats stats;
};

// Decides whether g admits a radio labeling with span <= s.
FeasibilityResult feasible_at_span(const Graph& g, const DistanceMatrix& dm, int s, const SolverConfig& cfg = {});

// Exact radio number by increasing span. Budgets apply to the whole call.
SolveResult solve(const Graph& g, const DistanceMatrix& dm, const SolverConfig& cfg = {});

// Order in which the search assigns vertices: decreasing diam - ecc(u),
// ties by vertex index.
std::vector<VertexId> search_order(const DistanceMatrix& dm);

}  // namespace radiolabel
