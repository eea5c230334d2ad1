#include "radiolabel/interval_set.hpp"

#include <algorithm>

namespace radiolabel {

void IntervalSet::insert(int lo, int hi) {
    if (lo > hi)
        return;
    // First run that could touch [lo, hi]: its hi >= lo - 1.
    auto first = std::lower_bound(runs_.begin(), runs_.end(), lo,
                                  [](const Interval& r, int x) { return r.hi < x - 1; });
    auto last = first;
    while (last != runs_.end() && last->lo <= hi + 1) {
        lo = std::min(lo, last->lo);
        hi = std::max(hi, last->hi);
        ++last;
    }
    if (first == last) {
        runs_.insert(first, Interval{lo, hi});
        return;
    }
    *first = Interval{lo, hi};
    runs_.erase(first + 1, last);
}

bool IntervalSet::contains(int x) const {
    auto it = std::lower_bound(runs_.begin(), runs_.end(), x, [](const Interval& r, int v) { return r.hi < v; });
    return it != runs_.end() && it->lo <= x;
}

bool IntervalSet::covers(int lo, int hi) const {
    if (lo > hi)
        return true;
    auto it = std::lower_bound(runs_.begin(), runs_.end(), lo, [](const Interval& r, int v) { return r.hi < v; });
    return it != runs_.end() && it->lo <= lo && it->hi >= hi;
}

int IntervalSet::next_gap(int x) const {
    auto it = std::lower_bound(runs_.begin(), runs_.end(), x, [](const Interval& r, int v) { return r.hi < v; });
    if (it != runs_.end() && it->lo <= x)
        return it->hi + 1;
    return x;
}

std::optional<int> IntervalSet::first_free(int lo, int hi) const {
    if (lo > hi)
        return std::nullopt;
    int y = next_gap(lo);
    if (y > hi)
        return std::nullopt;
    return y;
}

int IntervalSet::count_free(int lo, int hi) const {
    if (lo > hi)
        return 0;
    int covered = 0;
    for (const auto& r : runs_) {
        const int a = std::max(lo, r.lo);
        const int b = std::min(hi, r.hi);
        if (a <= b)
            covered += b - a + 1;
    }
    return (hi - lo + 1) - covered;
}

}  // namespace radiolabel
