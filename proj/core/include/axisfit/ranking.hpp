#pragma once

// Axis rules over complete strict rankings, used as experimental baselines.
// A ranking is single-peaked on an axis when every top-k prefix of it is an
// interval of the axis. VD-rank charges 1 per ranking that is not
// single-peaked; FT-rank counts the triples x < y < z of the axis where the
// voter ranks the middle candidate below both outer ones, which is zero
// exactly on single-peaked rankings.

#include <vector>

#include "axisfit/core.hpp"
#include "axisfit/solver.hpp"

namespace axisfit {

enum class RankingRule {
    VoterDeletion,
    ForbiddenTriples,
};

std::string to_string(RankingRule rule);

/// A complete strict ranking, best candidate first.
struct RankingBallot {
    std::vector<std::uint8_t> order;  // rank -> candidate

    int size() const { return static_cast<int>(order.size()); }
};

struct RankingEntry {
    RankingBallot ballot;
    Rational weight;
};

class RankingProfile {
public:
    RankingProfile(std::vector<std::string> candidate_names, std::vector<RankingEntry> entries);

    int num_candidates() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& candidate_names() const { return names_; }
    const std::vector<RankingEntry>& entries() const { return entries_; }

private:
    std::vector<std::string> names_;
    std::vector<RankingEntry> entries_;
};

bool is_single_peaked(const RankingBallot& ranking, const Axis& axis);

long ranking_cost(RankingRule rule, const RankingBallot& ranking, const Axis& axis);

Rational ranking_profile_cost(RankingRule rule, const RankingProfile& profile, const Axis& axis);

/// Exact argmin over canonical axes, same machinery and guarantees as solve().
SolveResult solve_ranking(const RankingProfile& profile, RankingRule rule,
                          const SolveOptions& options = {});

}  // namespace axisfit
