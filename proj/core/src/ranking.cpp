#include "axisfit/ranking.hpp"

#include <algorithm>
#include <map>

#include "search.hpp"

namespace axisfit {

std::string to_string(RankingRule rule) {
    return rule == RankingRule::VoterDeletion ? "vd-rank" : "ft-rank";
}

RankingProfile::RankingProfile(std::vector<std::string> candidate_names,
                               std::vector<RankingEntry> entries)
    : names_(std::move(candidate_names)), entries_(std::move(entries)) {
    int m = static_cast<int>(names_.size());
    if (m < 1) throw EmptyProfileError("profile has no candidates");
    if (m > kMaxCandidates) throw SizeLimitError("profile exceeds 64 candidates");
    for (const auto& entry : entries_) {
        if (entry.ballot.size() != m)
            throw CandidateMismatchError("ranking must order every candidate");
        CandidateSet seen = 0;
        for (int c : entry.ballot.order) {
            if (c >= m || set_contains(seen, c))
                throw std::invalid_argument("ranking is not a permutation");
            seen |= CandidateSet{1} << c;
        }
        if (entry.weight < Rational(0))
            throw std::invalid_argument("ranking weights must be non-negative");
    }
}

namespace {

// rank_of[c] = position of c in the ranking, 0 = best.
std::vector<std::uint8_t> ranks_of(const RankingBallot& ranking) {
    std::vector<std::uint8_t> rank(ranking.order.size());
    for (std::size_t r = 0; r < ranking.order.size(); ++r)
        rank[ranking.order[r]] = static_cast<std::uint8_t>(r);
    return rank;
}

// Walk the ranking from the top; each next candidate must extend the axis
// window by one position on either side.
bool single_peaked_on(const std::uint8_t* ranked, int m, const std::uint8_t* pos) {
    int lo = pos[ranked[0]];
    int hi = lo;
    for (int r = 1; r < m; ++r) {
        int p = pos[ranked[r]];
        if (p == lo - 1)
            lo = p;
        else if (p == hi + 1)
            hi = p;
        else
            return false;
    }
    return true;
}

// Forbidden triples: per axis position j, voters ranking the candidate there
// below some candidate on each side contribute (better-left) * (better-right).
long forbidden_triples_on(const std::uint8_t* rank, int m, const std::uint8_t* order) {
    long total = 0;
    for (int j = 1; j + 1 < m; ++j) {
        int rj = rank[order[j]];
        long left = 0;
        for (int i = 0; i < j; ++i)
            if (rank[order[i]] < rj) ++left;
        if (left == 0) continue;
        long right = 0;
        for (int k = j + 1; k < m; ++k)
            if (rank[order[k]] < rj) ++right;
        total += left * right;
    }
    return total;
}

struct RankingEvaluator {
    int m = 0;
    RankingRule rule = RankingRule::VoterDeletion;
    std::int64_t scale = 1;
    // (rank -> candidate, candidate -> rank, scaled weight), weight-descending
    struct Entry {
        std::vector<std::uint8_t> ranked;
        std::vector<std::uint8_t> rank;
        std::int64_t weight;
    };
    std::vector<Entry> entries;

    std::int64_t axis_cost(const std::uint8_t* order, const std::uint8_t* pos,
                           std::int64_t abort_above) const {
        std::int64_t total = 0;
        for (const auto& entry : entries) {
            long cost;
            if (rule == RankingRule::VoterDeletion)
                cost = single_peaked_on(entry.ranked.data(), m, pos) ? 0 : 1;
            else
                cost = forbidden_triples_on(entry.rank.data(), m, order);
            if (cost != 0) {
                total += entry.weight * cost;
                if (total > abort_above) return total;
            }
        }
        return total;
    }

    std::int64_t reduced_cost(const int* order, int k) const {
        std::uint8_t pos[kMaxCandidates];
        std::uint8_t sub_order[kMaxCandidates];
        bool keep[kMaxCandidates] = {};
        for (int i = 0; i < k; ++i) {
            pos[order[i]] = static_cast<std::uint8_t>(i);
            sub_order[i] = static_cast<std::uint8_t>(order[i]);
            keep[order[i]] = true;
        }
        std::int64_t total = 0;
        std::uint8_t sub_ranked[kMaxCandidates];
        std::uint8_t sub_rank[kMaxCandidates];
        for (const auto& entry : entries) {
            long cost = 0;
            if (rule == RankingRule::VoterDeletion) {
                int n = 0;
                for (int r = 0; r < m; ++r)
                    if (keep[entry.ranked[r]]) sub_ranked[n++] = entry.ranked[r];
                cost = single_peaked_on(sub_ranked, k, pos) ? 0 : 1;
            } else {
                // restriction keeps relative ranks
                int next = 0;
                for (int r = 0; r < m; ++r)
                    if (keep[entry.ranked[r]]) sub_rank[entry.ranked[r]] = static_cast<std::uint8_t>(next++);
                long partial = 0;
                for (int j = 1; j + 1 < k; ++j) {
                    int rj = sub_rank[sub_order[j]];
                    long left = 0;
                    for (int i = 0; i < j; ++i)
                        if (sub_rank[sub_order[i]] < rj) ++left;
                    if (left == 0) continue;
                    long right = 0;
                    for (int t = j + 1; t < k; ++t)
                        if (sub_rank[sub_order[t]] < rj) ++right;
                    partial += left * right;
                }
                cost = partial;
            }
            if (cost != 0) total += entry.weight * cost;
        }
        return total;
    }
};

RankingEvaluator build_evaluator(const RankingProfile& profile, RankingRule rule) {
    // merge identical rankings and sort by decreasing weight
    std::map<std::vector<std::uint8_t>, Rational> merged;
    for (const auto& entry : profile.entries()) {
        auto [it, inserted] = merged.emplace(entry.ballot.order, entry.weight);
        if (!inserted) it->second += entry.weight;
    }
    std::vector<std::pair<std::vector<std::uint8_t>, Rational>> sorted(merged.begin(), merged.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return b.second < a.second; });

    RankingEvaluator eval;
    eval.m = profile.num_candidates();
    eval.rule = rule;
    std::vector<Rational> weights;
    for (const auto& [order, weight] : sorted) weights.push_back(weight);
    eval.scale = detail::weight_scale(weights);
    for (const auto& [order, weight] : sorted) {
        RankingEvaluator::Entry entry;
        entry.ranked = order;
        entry.rank = ranks_of(RankingBallot{order});
        entry.weight = detail::scaled_weight(weight, eval.scale);
        eval.entries.push_back(std::move(entry));
    }
    return eval;
}

}  // namespace

bool is_single_peaked(const RankingBallot& ranking, const Axis& axis) {
    if (ranking.size() != axis.size())
        throw CandidateMismatchError("ranking and axis have different candidate counts");
    auto pos = axis.positions();
    return single_peaked_on(ranking.order.data(), axis.size(), pos.data());
}

long ranking_cost(RankingRule rule, const RankingBallot& ranking, const Axis& axis) {
    if (ranking.size() != axis.size())
        throw CandidateMismatchError("ranking and axis have different candidate counts");
    if (rule == RankingRule::VoterDeletion) return is_single_peaked(ranking, axis) ? 0 : 1;
    auto rank = ranks_of(ranking);
    return forbidden_triples_on(rank.data(), axis.size(), axis.order().data());
}

Rational ranking_profile_cost(RankingRule rule, const RankingProfile& profile, const Axis& axis) {
    Rational total(0);
    for (const auto& entry : profile.entries()) {
        long cost = ranking_cost(rule, entry.ballot, axis);
        if (cost != 0) total += entry.weight * Rational(cost);
    }
    return total;
}

SolveResult solve_ranking(const RankingProfile& profile, RankingRule rule,
                          const SolveOptions& options) {
    if (options.enumeration_bound < 1)
        throw std::invalid_argument("enumeration_bound must be at least 1");
    if (options.thread_count < 1) throw std::invalid_argument("thread_count must be positive");
    int m = profile.num_candidates();
    if (m > options.enumeration_bound)
        throw SizeLimitError("profile has " + std::to_string(m) +
                             " candidates, enumeration bound is " +
                             std::to_string(options.enumeration_bound));
    RankingEvaluator eval = build_evaluator(profile, rule);
    detail::SearchKnobs knobs;
    knobs.pair_pruning = options.use_pair_pruning;
    knobs.early_abort = options.use_early_abort;
    knobs.thread_count = options.thread_count;
    if (options.warm_start) {
        if (options.warm_start->size() != m)
            throw CandidateMismatchError("warm start axis has wrong candidate count");
        auto pos = options.warm_start->positions();
        knobs.initial_incumbent = eval.axis_cost(options.warm_start->order().data(), pos.data(),
                                                 std::numeric_limits<std::int64_t>::max());
    }
    detail::SearchOutcome outcome = detail::run_search(m, eval, knobs);
    SolveResult result;
    result.optimal_cost = Rational(outcome.optimal_cost, eval.scale);
    result.optimal_axes = std::move(outcome.optimal_axes);
    result.axes_examined = outcome.axes_examined;
    result.axes_pruned = outcome.axes_pruned;
    return result;
}

}  // namespace axisfit
