#include "radiolabel/solver.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <numeric>
#include <thread>

#include "radiolabel/bounds.hpp"
#include "radiolabel/interval_set.hpp"

namespace radiolabel {

using Clock = std::chrono::steady_clock;

void validate(const SolverConfig& cfg) {
    if (cfg.node_budget && *cfg.node_budget == 0)
        throw Error(ErrorKind::InvalidParameter, "node budget must be positive");
    if (cfg.time_budget && cfg.time_budget->count() <= 0)
        throw Error(ErrorKind::InvalidParameter, "time budget must be positive");
    if (cfg.start_span && *cfg.start_span < 1)
        throw Error(ErrorKind::InvalidParameter, "start span must be positive");
    if (cfg.workers == 0)
        throw Error(ErrorKind::InvalidParameter, "worker count must be positive");
}

int SolveResult::rn() const {
    if (!solved())
        throw Error(ErrorKind::InvalidParameter, "solve was inconclusive; no radio number available");
    return *upper_bound;
}

std::vector<VertexId> search_order(const DistanceMatrix& dm) {
    std::vector<VertexId> order(dm.size());
    std::iota(order.begin(), order.end(), VertexId{0});
    const int diam = dm.diameter();
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return diam - dm.eccentricity(a) > diam - dm.eccentricity(b);
    });
    return order;
}

namespace {

// Shared across every span tried by one solve() call and across workers.
class Budget {
public:
    explicit Budget(const SolverConfig& cfg) : node_limit_(cfg.node_budget.value_or(0)) {
        if (cfg.time_budget)
            deadline_ = Clock::now() + *cfg.time_budget;
    }

    // False once either budget is spent.
    bool charge_node() {
        const auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (node_limit_ != 0 && n > node_limit_) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        if (deadline_ && (n & 0x3ff) == 0 && Clock::now() > *deadline_)
            exhausted_.store(true, std::memory_order_relaxed);
        return !exhausted_.load(std::memory_order_relaxed);
    }

    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
    std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

private:
    std::uint64_t node_limit_;
    std::optional<Clock::time_point> deadline_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
};

enum class Outcome { Found, Exhausted, Aborted };

// Depth-first search over vertices in a fixed order. Each assignment c(v) = x
// forbids, for every later vertex u, the interval of values within
// diam - d(u, v) of x; a vertex whose domain [1, s] is fully forbidden
// triggers a backtrack.
class Search {
public:
    Search(const DistanceMatrix& dm, const std::vector<VertexId>& order, int s, Budget& budget,
           const std::atomic<int>& cutoff)
        : order_(order), s_(s), budget_(budget), cutoff_(cutoff) {
        const std::size_t n = order.size();
        const int required = dm.diameter() + 1;
        reach_.assign(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                reach_[i][j] = required - dm(order[i], order[j]) - 1;
        forbidden_.resize(n);
        labels_.assign(n, 0);
        saved_.assign(n, {});
    }

    // Search with order[0] fixed to `first`.
    Outcome run_from(int first) {
        for (auto& f : forbidden_)
            f.clear();
        return assign(0, first);
    }

    Labeling witness() const {
        std::vector<Label> by_vertex(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i)
            by_vertex[order_[i]] = labels_[i];
        return Labeling(std::move(by_vertex));
    }

private:
    Outcome assign(std::size_t depth, int x) {
        if (!budget_.charge_node())
            return Outcome::Aborted;
        const std::size_t n = order_.size();
        labels_[depth] = x;
        if (depth + 1 == n)
            return Outcome::Found;

        auto& trail = saved_[depth];
        trail.assign(forbidden_.begin() + static_cast<std::ptrdiff_t>(depth + 1), forbidden_.end());
        bool wiped = false;
        for (std::size_t j = depth + 1; j < n && !wiped; ++j) {
            const int r = reach_[depth][j];
            forbidden_[j].insert(std::max(1, x - r), std::min(s_, x + r));
            wiped = forbidden_[j].covers(1, s_);
        }

        Outcome result = Outcome::Exhausted;
        if (!wiped)
            result = descend(depth + 1);
        std::copy(trail.begin(), trail.end(), forbidden_.begin() + static_cast<std::ptrdiff_t>(depth + 1));
        return result;
    }

    Outcome descend(std::size_t depth) {
        const auto& dom = forbidden_[depth];
        for (int y = dom.next_gap(1); y <= s_; y = dom.next_gap(y + 1)) {
            if (cutoff_.load(std::memory_order_relaxed) < current_first())
                return Outcome::Aborted;
            Outcome o = assign(depth, y);
            if (o != Outcome::Exhausted)
                return o;
        }
        return Outcome::Exhausted;
    }

    int current_first() const { return labels_[0]; }

    const std::vector<VertexId>& order_;
    int s_;
    Budget& budget_;
    const std::atomic<int>& cutoff_;
    std::vector<std::vector<int>> reach_;
    std::vector<IntervalSet> forbidden_;
    std::vector<Label> labels_;
    std::vector<std::vector<IntervalSet>> saved_;
};

FeasibilityResult feasible_impl(const Graph& g, const DistanceMatrix& dm, int s, const SolverConfig& cfg,
                                Budget& budget) {
    FeasibilityResult result;
    const std::size_t n = g.vertex_count();
    if (s < static_cast<int>(n)) {
        result.status = Feasibility::None;
        return result;
    }

    const auto order = search_order(dm);
    const int top = cfg.symmetry_breaking ? (s + 2) / 2 : s;

    // Per top-level value: outcome and witness. The reported witness is the
    // one from the smallest first label, which is what a single worker finds.
    std::vector<Outcome> outcomes(static_cast<std::size_t>(top) + 1, Outcome::Aborted);
    std::vector<std::optional<Labeling>> witnesses(static_cast<std::size_t>(top) + 1);
    std::atomic<int> next{1};
    std::atomic<int> cutoff{INT_MAX};

    auto worker = [&] {
        Search search(dm, order, s, budget, cutoff);
        for (;;) {
            const int x = next.fetch_add(1);
            if (x > top || x > cutoff.load() || budget.exhausted())
                return;
            Outcome o = search.run_from(x);
            outcomes[static_cast<std::size_t>(x)] = o;
            if (o == Outcome::Found) {
                witnesses[static_cast<std::size_t>(x)] = search.witness();
                int cur = cutoff.load();
                while (x < cur && !cutoff.compare_exchange_weak(cur, x)) {
                }
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(top)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    bool all_exhausted = true;
    for (int x = 1; x <= top; ++x) {
        const auto o = outcomes[static_cast<std::size_t>(x)];
        if (o == Outcome::Found) {
            result.status = Feasibility::Found;
            result.labeling = std::move(witnesses[static_cast<std::size_t>(x)]);
            return result;
        }
        if (o != Outcome::Exhausted)
            all_exhausted = false;
    }
    result.status = all_exhausted ? Feasibility::None : Feasibility::Inconclusive;
    return result;
}

}  // namespace

FeasibilityResult feasible_at_span(const Graph& g, const DistanceMatrix& dm, int s, const SolverConfig& cfg) {
    validate(cfg);
    if (s < 1)
        throw Error(ErrorKind::InvalidParameter, "span must be positive");
    const auto start = Clock::now();
    Budget budget(cfg);
    auto result = feasible_impl(g, dm, s, cfg, budget);
    result.stats.nodes_explored = budget.nodes();
    result.stats.spans_tried = 1;
    result.stats.wall_time = Clock::now() - start;
    return result;
}

SolveResult solve(const Graph& g, const DistanceMatrix& dm, const SolverConfig& cfg) {
    validate(cfg);
    const auto start = Clock::now();
    Budget budget(cfg);
    SolveResult result;

    const int vertices = static_cast<int>(g.vertex_count());
    const int generic = std::max(lower_bound_trivial(g).value, lower_bound_ecc_gap(g, dm).value);
    int refuted = vertices - 1;  // every span below |V| is impossible
    std::optional<Labeling> best;
    int hi = 0;

    auto finish = [&](SolveStatus status) {
        result.status = status;
        result.lower_bound = std::max(generic, refuted + 1);
        if (best) {
            result.upper_bound = hi;
            result.witness = std::move(best);
        }
        if (status == SolveStatus::Solved)
            result.lower_bound = hi;
        result.stats.nodes_explored = budget.nodes();
        result.stats.wall_time = Clock::now() - start;
        return result;
    };

    auto attempt = [&](int s) {
        ++result.stats.spans_tried;
        auto r = feasible_impl(g, dm, s, cfg, budget);
        if (r.status == Feasibility::Found) {
            best = std::move(r.labeling);
            hi = span(*best);
        } else if (r.status == Feasibility::None) {
            refuted = std::max(refuted, s);
        }
        return r.status;
    };

    for (int s = std::max(cfg.start_span.value_or(generic), vertices); !best; ++s) {
        if (attempt(s) == Feasibility::Inconclusive)
            return finish(SolveStatus::Inconclusive);
    }
    // Certify: every span below hi must be refuted by exhaustion.
    while (refuted < hi - 1) {
        if (attempt(hi - 1) == Feasibility::Inconclusive)
            return finish(SolveStatus::Inconclusive);
    }
    return finish(SolveStatus::Solved);
}

}  // namespace radiolabel
