#include "axisfit/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "search.hpp"

namespace axisfit {

namespace detail {

std::int64_t weight_scale(const std::vector<Rational>& weights) {
    std::int64_t scale = 1;
    for (const auto& w : weights) {
        std::int64_t d = w.den();
        std::int64_t g = std::gcd(scale, d);
        __int128 next = static_cast<__int128>(scale / g) * d;
        if (next > INT64_MAX) throw std::overflow_error("weight denominators overflow");
        scale = static_cast<std::int64_t>(next);
    }
    return scale;
}

std::int64_t scaled_weight(const Rational& weight, std::int64_t scale) {
    __int128 v = static_cast<__int128>(weight.num()) * (scale / weight.den());
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("scaled weight overflows");
    return static_cast<std::int64_t>(v);
}

namespace {

struct ApprovalEvaluator {
    int m = 0;
    CostRule rule = CostRule::VoterDeletion;
    // weight-descending, weights scaled to integers
    std::vector<std::pair<CandidateSet, std::int64_t>> entries;

    static ApprovalEvaluator build(const WeightedProfile& preprocessed, CostRule rule) {
        ApprovalEvaluator eval;
        eval.m = preprocessed.num_candidates();
        eval.rule = rule;
        std::vector<Rational> weights;
        weights.reserve(preprocessed.entries().size());
        for (const auto& entry : preprocessed.entries()) weights.push_back(entry.weight);
        std::int64_t scale = weight_scale(weights);
        eval.scale = scale;
        for (const auto& entry : preprocessed.entries())
            eval.entries.push_back({entry.ballot.members, scaled_weight(entry.weight, scale)});
        // guard: the largest conceivable axis cost must fit comfortably
        __int128 worst = 0;
        std::int64_t max_ballot = static_cast<std::int64_t>(eval.m) * eval.m * eval.m / 4 + 1;
        for (const auto& [members, w] : eval.entries) worst += static_cast<__int128>(w) * max_ballot;
        if (worst > INT64_MAX / 4) throw std::overflow_error("profile weights too large for exact search");
        return eval;
    }

    std::int64_t axis_cost(const std::uint8_t* /*order*/, const std::uint8_t* pos,
                           std::int64_t abort_above) const {
        std::int64_t total = 0;
        for (const auto& [members, weight] : entries) {
            std::uint64_t bits = 0;
            CandidateSet rest = members;
            while (rest != 0) {
                int c = std::countr_zero(rest);
                bits |= std::uint64_t{1} << pos[c];
                rest &= rest - 1;
            }
            long cost = vector_cost(rule, bits, m);
            if (cost != 0) {
                total += weight * cost;
                if (total > abort_above) return total;
            }
        }
        return total;
    }

    std::int64_t reduced_cost(const int* order, int k) const {
        std::uint8_t pos[kMaxCandidates];
        CandidateSet keep = 0;
        for (int i = 0; i < k; ++i) {
            pos[order[i]] = static_cast<std::uint8_t>(i);
            keep |= CandidateSet{1} << order[i];
        }
        std::int64_t total = 0;
        for (const auto& [members, weight] : entries) {
            std::uint64_t bits = 0;
            CandidateSet rest = members & keep;
            while (rest != 0) {
                int c = std::countr_zero(rest);
                bits |= std::uint64_t{1} << pos[c];
                rest &= rest - 1;
            }
            long cost = vector_cost(rule, bits, k);
            if (cost != 0) total += weight * cost;
        }
        return total;
    }

    std::int64_t scale = 1;
};

SolveResult plain_solve(const WeightedProfile& preprocessed, CostRule rule,
                        const SolveOptions& options) {
    ApprovalEvaluator eval = ApprovalEvaluator::build(preprocessed, rule);
    SearchKnobs knobs;
    knobs.pair_pruning = options.use_pair_pruning;
    knobs.early_abort = options.use_early_abort;
    knobs.thread_count = options.thread_count;
    if (options.warm_start) {
        if (options.warm_start->size() != eval.m)
            throw CandidateMismatchError("warm start axis has wrong candidate count");
        auto pos = options.warm_start->positions();
        knobs.initial_incumbent = eval.axis_cost(options.warm_start->order().data(), pos.data(),
                                                 std::numeric_limits<std::int64_t>::max());
    }
    SearchOutcome outcome = run_search(eval.m, eval, knobs);
    SolveResult result;
    result.optimal_cost = Rational(outcome.optimal_cost, eval.scale);
    result.optimal_axes = std::move(outcome.optimal_axes);
    result.axes_examined = outcome.axes_examined;
    result.axes_pruned = outcome.axes_pruned;
    return result;
}

bool rule_is_partition_consistent(CostRule rule) {
    return rule == CostRule::BallotCompletion || rule == CostRule::MinSwaps ||
           rule == CostRule::ForbiddenTriples;
}

void validate_options(const SolveOptions& options) {
    if (options.enumeration_bound < 1)
        throw std::invalid_argument("enumeration_bound must be at least 1");
    if (options.thread_count < 1) throw std::invalid_argument("thread_count must be positive");
}

SolveResult decomposed_solve(const WeightedProfile& preprocessed, CostRule rule,
                             const SolveOptions& options, const CandidatePartition& partition) {
    SolveOptions class_options = options;
    class_options.use_decomposition = false;
    class_options.warm_start.reset();

    struct ClassSolution {
        std::vector<int> members;  // global candidate ids, ascending
        std::vector<Axis> axes;    // canonical local optima
    };
    std::vector<ClassSolution> classes;
    Rational total_cost(0);
    std::uint64_t examined = 0, pruned = 0;
    for (CandidateSet cls : partition.classes) {
        ClassSolution solution;
        solution.members = set_members(cls);
        if (solution.members.size() == 1) {
            solution.axes.push_back(Axis::identity(1));
        } else {
            WeightedProfile sub = restricted(preprocessed, cls);
            SolveResult sub_result = plain_solve(sub, rule, class_options);
            total_cost += sub_result.optimal_cost;
            examined += sub_result.axes_examined;
            pruned += sub_result.axes_pruned;
            solution.axes = std::move(sub_result.optimal_axes);
        }
        classes.push_back(std::move(solution));
    }

    // All concatenations: every order of the classes, every local optimum,
    // both orientations of each block; canonical forms deduplicated.
    int k = static_cast<int>(classes.size());
    std::vector<int> class_order(k);
    std::iota(class_order.begin(), class_order.end(), 0);
    std::set<Axis> axes;
    int m = preprocessed.num_candidates();
    do {
        std::vector<int> choice(k, 0), orientation(k, 0);
        while (true) {
            std::vector<int> order;
            order.reserve(m);
            for (int idx = 0; idx < k; ++idx) {
                const ClassSolution& cls = classes[class_order[idx]];
                const Axis& local = cls.axes[choice[idx]];
                int sz = local.size();
                for (int p = 0; p < sz; ++p) {
                    int local_c = orientation[idx] ? local.at(sz - 1 - p) : local.at(p);
                    order.push_back(cls.members[local_c]);
                }
            }
            axes.insert(canonicalize(Axis(std::move(order))));
            // odometer over (choice, orientation) pairs
            int idx = 0;
            for (; idx < k; ++idx) {
                if (orientation[idx] == 0) {
                    orientation[idx] = 1;
                    break;
                }
                orientation[idx] = 0;
                if (choice[idx] + 1 < static_cast<int>(classes[class_order[idx]].axes.size())) {
                    ++choice[idx];
                    break;
                }
                choice[idx] = 0;
            }
            if (idx == k) break;
        }
    } while (std::next_permutation(class_order.begin(), class_order.end()));

    SolveResult result;
    result.optimal_cost = total_cost;
    result.optimal_axes.assign(axes.begin(), axes.end());
    result.axes_examined = examined;
    result.axes_pruned = pruned;
    return result;
}

}  // namespace
}  // namespace detail

SolveResult solve(const WeightedProfile& profile, CostRule rule, const SolveOptions& options) {
    detail::validate_options(options);
    int m = profile.num_candidates();
    if (m > options.enumeration_bound)
        throw SizeLimitError("profile has " + std::to_string(m) +
                             " candidates, enumeration bound is " +
                             std::to_string(options.enumeration_bound));
    WeightedProfile prep = preprocess(profile);
    if (options.use_decomposition && detail::rule_is_partition_consistent(rule)) {
        CandidatePartition partition = coapproval_partition(prep);
        if (partition.classes.size() >= 2)
            return detail::decomposed_solve(prep, rule, options, partition);
    }
    return detail::plain_solve(prep, rule, options);
}

SolveResult solve_decomposed(const WeightedProfile& profile, CostRule rule,
                             const SolveOptions& options) {
    detail::validate_options(options);
    if (!detail::rule_is_partition_consistent(rule))
        throw RuleUnsupportedError(to_string(rule) + " does not satisfy partition consistency");
    int m = profile.num_candidates();
    if (m > options.enumeration_bound)
        throw SizeLimitError("profile exceeds the enumeration bound");
    WeightedProfile prep = preprocess(profile);
    return detail::decomposed_solve(prep, rule, options, coapproval_partition(prep));
}

Rational lower_bound_pair_removal(const WeightedProfile& profile, CostRule rule,
                                  const std::vector<int>& reduced_order) {
    CandidateSet keep = 0;
    for (int c : reduced_order) {
        if (c < 0 || c >= profile.num_candidates() || set_contains(keep, c))
            throw std::invalid_argument("reduced axis is not a candidate subsequence");
        keep |= CandidateSet{1} << c;
    }
    WeightedProfile sub = restricted(profile, keep);
    std::vector<int> kept = set_members(keep);
    std::vector<int> local_order;
    local_order.reserve(reduced_order.size());
    for (int c : reduced_order) {
        auto it = std::lower_bound(kept.begin(), kept.end(), c);
        local_order.push_back(static_cast<int>(it - kept.begin()));
    }
    return profile_cost(rule, sub, Axis(std::move(local_order)));
}

std::vector<Axis> group_axes(const std::vector<int>& reduced_order, int m) {
    if (static_cast<int>(reduced_order.size()) != m - 2)
        throw std::invalid_argument("reduced axis must omit exactly two candidates");
    CandidateSet present = 0;
    for (int c : reduced_order) {
        if (c < 0 || c >= m || set_contains(present, c))
            throw std::invalid_argument("reduced axis is not a candidate subsequence");
        present |= CandidateSet{1} << c;
    }
    std::vector<int> missing = set_members(full_set(m) & ~present);
    int u = missing[0], w = missing[1];
    std::vector<Axis> out;
    std::vector<std::uint8_t> axis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            if (!detail::build_insertion(reduced_order, m, u, w, i, j, axis.data())) continue;
            out.push_back(Axis(std::vector<int>(axis.begin(), axis.end())));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Axis greedy_warm_start(const WeightedProfile& profile, CostRule rule) {
    int m = profile.num_candidates();
    if (m == 1) return Axis::identity(1);
    WeightedProfile prep = preprocess(profile);

    std::vector<int> by_weight(m);
    std::iota(by_weight.begin(), by_weight.end(), 0);
    std::vector<Rational> score(m);
    for (int c = 0; c < m; ++c) score[c] = profile.approval_score(c);
    std::stable_sort(by_weight.begin(), by_weight.end(),
                     [&](int a, int b) { return score[b] < score[a]; });

    std::vector<int> placed;
    placed.reserve(m);
    placed.push_back(by_weight[0]);
    for (int idx = 1; idx < m; ++idx) {
        int c = by_weight[idx];
        std::size_t best_pos = 0;
        Rational best_cost;
        for (std::size_t p = 0; p <= placed.size(); ++p) {
            std::vector<int> trial = placed;
            trial.insert(trial.begin() + static_cast<std::ptrdiff_t>(p), c);
            // cost of the profile restricted to the candidates placed so far
            CandidateSet keep = 0;
            for (int x : trial) keep |= CandidateSet{1} << x;
            WeightedProfile sub = restricted(prep, keep);
            std::vector<int> kept = set_members(keep);
            std::vector<int> local;
            local.reserve(trial.size());
            for (int x : trial) {
                auto it = std::lower_bound(kept.begin(), kept.end(), x);
                local.push_back(static_cast<int>(it - kept.begin()));
            }
            Rational cost = profile_cost(rule, sub, Axis(std::move(local)));
            if (p == 0 || cost < best_cost) {
                best_cost = cost;
                best_pos = p;
            }
        }
        placed.insert(placed.begin() + static_cast<std::ptrdiff_t>(best_pos), c);
    }
    return Axis(std::move(placed));
}

}  // namespace axisfit
