#pragma once

#include <optional>
#include <vector>

namespace radiolabel {

// Sorted, disjoint, non-adjacent closed integer intervals.
class IntervalSet {
public:
    struct Interval {
        int lo;
        int hi;
        friend bool operator==(const Interval&, const Interval&) = default;
    };

    // Adds [lo, hi]; no-op when lo > hi. Merges overlapping and touching runs.
    void insert(int lo, int hi);

    bool contains(int x) const;
    bool covers(int lo, int hi) const;
    // Smallest y >= x not in the set.
    int next_gap(int x) const;
    // Smallest y in [lo, hi] not in the set.
    std::optional<int> first_free(int lo, int hi) const;
    // Number of integers in [lo, hi] not in the set.
    int count_free(int lo, int hi) const;

    const std::vector<Interval>& intervals() const { return runs_; }
    bool empty() const { return runs_.empty(); }
    void clear() { runs_.clear(); }

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> runs_;
};

}  // namespace radiolabel
