#pragma once

// Internal search engine shared by the approval and ranking solvers.
// Costs are pre-scaled to 64-bit integers so the incumbent comparisons stay
// exact. The Evaluator supplies per-axis and reduced-axis costs:
//
//   int64_t axis_cost(const uint8_t* order, const uint8_t* pos,
//                     int64_t abort_above) const;
//       cost of a full axis; may return any value strictly greater than
//       abort_above once the running sum passes it.
//   int64_t reduced_cost(const int* order, int k) const;
//       cost of the instance restricted to the k listed candidates, ordered
//       as given.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <numeric>
#include <thread>
#include <vector>

#include "axisfit/core.hpp"

namespace axisfit::detail {

struct SearchKnobs {
    bool pair_pruning = true;
    bool early_abort = true;
    int thread_count = 1;
    std::int64_t initial_incumbent = std::numeric_limits<std::int64_t>::max();
};

struct SearchOutcome {
    std::int64_t optimal_cost = 0;
    std::vector<Axis> optimal_axes;  // canonical, sorted
    std::uint64_t axes_examined = 0;
    std::uint64_t axes_pruned = 0;
};

// Fills `axis` with reduced[] plus candidate u at position i and w at position
// j (i != j); returns false when the result is not canonical.
inline bool build_insertion(const std::vector<int>& reduced, int m, int u, int w, int i, int j,
                            std::uint8_t* axis) {
    int next = 0;
    for (int p = 0; p < m; ++p) {
        if (p == i)
            axis[p] = static_cast<std::uint8_t>(u);
        else if (p == j)
            axis[p] = static_cast<std::uint8_t>(w);
        else
            axis[p] = static_cast<std::uint8_t>(reduced[next++]);
    }
    return m < 2 || axis[0] < axis[m - 1];
}

// Insertion positions visited from the outside in: 0, m-1, 1, m-2, ...
inline std::vector<int> outside_in_positions(int m) {
    std::vector<int> out;
    out.reserve(m);
    int lo = 0, hi = m - 1;
    while (lo <= hi) {
        out.push_back(lo);
        if (hi != lo) out.push_back(hi);
        ++lo;
        --hi;
    }
    return out;
}

template <typename PerGroup>
void for_each_group(int m, int thread_index, int thread_count, PerGroup&& per_group) {
    std::vector<int> reduced(m - 2);
    std::iota(reduced.begin(), reduced.end(), 0);
    std::uint64_t index = 0;
    do {
        if (static_cast<int>(index % thread_count) == thread_index) per_group(reduced);
        ++index;
    } while (std::next_permutation(reduced.begin(), reduced.end()));
}

template <typename Evaluator>
SearchOutcome run_search(int m, const Evaluator& eval, const SearchKnobs& knobs) {
    SearchOutcome outcome;
    if (m <= 2) {
        Axis axis = Axis::identity(m);
        auto pos = axis.positions();
        outcome.optimal_cost =
            eval.axis_cost(axis.order().data(), pos.data(), std::numeric_limits<std::int64_t>::max());
        outcome.optimal_axes.push_back(axis);
        outcome.axes_examined = 1;
        return outcome;
    }

    const int u = m - 2;
    const int w = m - 1;
    const std::vector<int> insert_order = outside_in_positions(m);
    const int threads = std::max(1, knobs.thread_count);
    const std::int64_t no_abort = std::numeric_limits<std::int64_t>::max();

    // Pass 1: establish the optimal cost. The incumbent is a shared
    // monotonically non-increasing upper bound.
    std::atomic<std::int64_t> incumbent{knobs.initial_incumbent};
    auto scan_cost = [&](int thread_index) {
        std::vector<std::uint8_t> axis(m), pos(m);
        for_each_group(m, thread_index, threads, [&](const std::vector<int>& reduced) {
            std::int64_t seen = incumbent.load(std::memory_order_relaxed);
            if (knobs.pair_pruning && m >= 4 &&
                eval.reduced_cost(reduced.data(), m - 2) >= seen && seen != no_abort)
                return;  // no member of this group can improve the incumbent
            for (int i : insert_order) {
                for (int j : insert_order) {
                    if (i == j) continue;
                    if (!build_insertion(reduced, m, u, w, i, j, axis.data())) continue;
                    for (int p = 0; p < m; ++p) pos[axis[p]] = static_cast<std::uint8_t>(p);
                    seen = incumbent.load(std::memory_order_relaxed);
                    std::int64_t abort_above = knobs.early_abort && seen != no_abort ? seen - 1 : no_abort;
                    std::int64_t cost = eval.axis_cost(axis.data(), pos.data(), abort_above);
                    while (cost < seen &&
                           !incumbent.compare_exchange_weak(seen, cost, std::memory_order_relaxed)) {
                    }
                }
            }
        });
    };
    if (threads == 1) {
        scan_cost(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(scan_cost, t);
        for (auto& th : pool) th.join();
    }
    const std::int64_t best = incumbent.load();

    // Pass 2: with the optimum as a fixed bound, collect every optimal axis
    // and the enumeration counters. All decisions depend only on `best`, so
    // the outcome is identical for any thread count.
    std::vector<SearchOutcome> partial(threads);
    auto scan_collect = [&](int thread_index) {
        SearchOutcome& local = partial[thread_index];
        std::vector<std::uint8_t> axis(m), pos(m);
        for_each_group(m, thread_index, threads, [&](const std::vector<int>& reduced) {
            if (knobs.pair_pruning && m >= 4 && eval.reduced_cost(reduced.data(), m - 2) > best) {
                for (int i : insert_order)
                    for (int j : insert_order)
                        if (i != j && build_insertion(reduced, m, u, w, i, j, axis.data()))
                            ++local.axes_pruned;
                return;
            }
            for (int i : insert_order) {
                for (int j : insert_order) {
                    if (i == j) continue;
                    if (!build_insertion(reduced, m, u, w, i, j, axis.data())) continue;
                    for (int p = 0; p < m; ++p) pos[axis[p]] = static_cast<std::uint8_t>(p);
                    ++local.axes_examined;
                    std::int64_t abort_above = knobs.early_abort ? best : no_abort;
                    if (eval.axis_cost(axis.data(), pos.data(), abort_above) == best) {
                        std::vector<int> order(axis.begin(), axis.end());
                        local.optimal_axes.push_back(Axis(std::move(order)));
                    }
                }
            }
        });
    };
    if (threads == 1) {
        scan_collect(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(scan_collect, t);
        for (auto& th : pool) th.join();
    }

    outcome.optimal_cost = best;
    for (auto& local : partial) {
        outcome.axes_examined += local.axes_examined;
        outcome.axes_pruned += local.axes_pruned;
        outcome.optimal_axes.insert(outcome.optimal_axes.end(),
                                    std::make_move_iterator(local.optimal_axes.begin()),
                                    std::make_move_iterator(local.optimal_axes.end()));
    }
    std::sort(outcome.optimal_axes.begin(), outcome.optimal_axes.end());
    return outcome;
}

// Common denominator of the entry weights; scaling by it turns all weights
// into exact 64-bit integers.
std::int64_t weight_scale(const std::vector<Rational>& weights);

// weight * (scale / weight.den()) with overflow checks.
std::int64_t scaled_weight(const Rational& weight, std::int64_t scale);

}  // namespace axisfit::detail
