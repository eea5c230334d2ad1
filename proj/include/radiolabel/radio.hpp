#pragma once

#include <vector>

#include "radiolabel/graph.hpp"

namespace radiolabel {

using Label = int;

// Total map VertexId -> positive label, stored densely by vertex index.
// Injectivity and positivity are enforced by check(), not here, so that
// malformed input can be carried to the verifier and reported.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {}

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    Label operator[](VertexId v) const { return labels_[v]; }
    Label& operator[](VertexId v) { return labels_[v]; }
    const std::vector<Label>& values() const { return labels_; }

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::vector<Label> labels_;
};

// One unordered pair (u < v) failing d(u,v) + |c(u) - c(v)| >= diam + 1.
struct Violation {
    VertexId u = 0;
    VertexId v = 0;
    int distance = 0;
    int label_gap = 0;
    int required = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// Throws InvalidLabeling when c is partial, has a label < 1, or is not
// injective.
void require_well_formed(const Graph& g, const Labeling& c);

// Every violating unordered pair, ordered by (u, v). Empty iff c is a radio
// labeling of g. `fail_fast` stops at the first violation found.
std::vector<Violation> check(const Graph& g, const DistanceMatrix& dm, const Labeling& c,
                             bool fail_fast = false);
std::vector<Violation> check(const Graph& g, const Labeling& c);

bool is_radio_labeling(const Graph& g, const Labeling& c);

// Largest label. Throws InvalidLabeling on an empty labeling.
Label span(const Labeling& c);

}  // namespace radiolabel
