#pragma once

// Detection of linear profiles (every ballot an interval of some common axis,
// i.e. the 0/1 approval matrix has the consecutive-ones property), enumeration
// of all consistent axes, and the co-approval partition of the candidates.

#include <vector>

#include "axisfit/core.hpp"

namespace axisfit {

constexpr int kDefaultEnumerationBound = 12;

/// Disjoint candidate classes closed under "approved together in some ballot".
struct CandidatePartition {
    std::vector<CandidateSet> classes;
};

/// All canonical axes on which every ballot is an interval, sorted.
/// Throws SizeLimitError when the profile has more than `bound` candidates.
std::vector<Axis> consistent_axes(const WeightedProfile& profile,
                                  int bound = kDefaultEnumerationBound);

bool is_linear(const WeightedProfile& profile, int bound = kDefaultEnumerationBound);

/// Transitive closure of co-approval; never-approved candidates end up in
/// singleton classes. Classes are ordered by their smallest member.
CandidatePartition coapproval_partition(const WeightedProfile& profile);

}  // namespace axisfit
