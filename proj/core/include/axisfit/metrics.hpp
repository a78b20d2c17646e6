#pragma once

// Distances between axes. The exported distance is Kendall-tau minimized over
// the reversal of one argument, so reversal-equivalent axes are at distance 0
// and the maximum is floor(m*(m-1)/4).

#include <vector>

#include "axisfit/core.hpp"
#include "axisfit/solver.hpp"

namespace axisfit {

/// Number of candidate pairs the two axes order differently.
long kendall_tau(const Axis& a, const Axis& b);

/// min(kendall_tau(a, b), kendall_tau(a, reversed b)).
long axis_distance(const Axis& a, const Axis& b);

/// Mean axis_distance from the returned optimal axes to the truth.
double avg_distance_to_truth(const SolveResult& result, const Axis& truth);

/// The middle candidate for odd m, the two middle candidates for even m.
std::vector<int> median_candidates(const Axis& axis);

}  // namespace axisfit
