#pragma once

// Per-ballot cost functions measuring how far a ballot is from being an
// interval of an axis, and the weighted profile cost that the exact solver
// minimizes. Six rules:
//
//   VoterDeletion    1 for every non-interval ballot.
//   MinFlips         fewest approvals to remove plus add to reach an interval.
//   BallotCompletion number of interfering candidates (approvals to add).
//   MinSwaps         fewest adjacent swaps of the axis making the ballot an
//                    interval; closed form sums, per interfering candidate,
//                    the smaller of the member counts on its two sides.
//   ForbiddenTriples per interfering candidate, members to its left times
//                    members to its right.
//   Genus            number of maximal gaps between members.
//
// Every rule is zero exactly on intervals, is invariant under reversing the
// axis, and depends only on the induced approval vector. For every ballot and
// axis the costs are ordered VD <= MF <= BC <= MS <= FT.

#include <cstdint>
#include <string>

#include "axisfit/core.hpp"

namespace axisfit {

enum class CostRule {
    VoterDeletion,
    MinFlips,
    BallotCompletion,
    MinSwaps,
    ForbiddenTriples,
    Genus,
};

constexpr CostRule kAllCostRules[] = {
    CostRule::VoterDeletion,  CostRule::MinFlips, CostRule::BallotCompletion,
    CostRule::MinSwaps,       CostRule::ForbiddenTriples, CostRule::Genus,
};

/// The five rules of the VD <= ... <= FT chain, in chain order.
constexpr CostRule kChainRules[] = {
    CostRule::VoterDeletion, CostRule::MinFlips, CostRule::BallotCompletion,
    CostRule::MinSwaps, CostRule::ForbiddenTriples,
};

std::string to_string(CostRule rule);

/// Cost of a raw approval vector of the given length. Zero iff the 1-bits
/// are contiguous or absent.
long vector_cost(CostRule rule, std::uint64_t bits, int length);

long ballot_cost(CostRule rule, const Ballot& ballot, const Axis& axis);

/// Weighted sum of ballot costs over the profile entries.
Rational profile_cost(CostRule rule, const WeightedProfile& profile, const Axis& axis);

}  // namespace axisfit
