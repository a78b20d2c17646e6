#pragma once

// Exact optimization over axes: minimum weighted profile cost and the complete
// set of optimal canonical axes.
//
// The search enumerates canonical axes only (first candidate id smaller than
// last), grouped by the reduced axis obtained by deleting the two
// highest-indexed candidates; a group whose reduced-axis cost already exceeds
// the incumbent is skipped wholesale, which is sound because every rule's cost
// weakly decreases when candidates are removed. Per-axis evaluation walks the
// weight-sorted entries and aborts as soon as the partial sum passes the
// incumbent. The reported optimum is exact and ties are fully enumerated.
//
// Results are deterministic for any thread count: a first sweep establishes
// the optimal cost, then a second sweep with that fixed bound collects the
// optimal axes and the enumeration counters.

#include <optional>
#include <string>
#include <vector>

#include "axisfit/core.hpp"
#include "axisfit/costs.hpp"
#include "axisfit/linearity.hpp"

namespace axisfit {

struct SolveOptions {
    int enumeration_bound = kDefaultEnumerationBound;
    bool use_pair_pruning = true;
    bool use_decomposition = true;  // applied only to rules satisfying partition consistency
    bool use_early_abort = true;
    std::optional<Axis> warm_start;
    int thread_count = 1;
};

struct SolveResult {
    Rational optimal_cost;
    std::vector<Axis> optimal_axes;  // canonical, sorted, non-empty
    std::uint64_t axes_examined = 0;
    std::uint64_t axes_pruned = 0;
};

SolveResult solve(const WeightedProfile& profile, CostRule rule, const SolveOptions& options = {});

/// Cost of the profile restricted to the candidates of the reduced axis, a
/// lower bound on the cost of every member of group_axes(reduced_order, m).
Rational lower_bound_pair_removal(const WeightedProfile& profile, CostRule rule,
                                  const std::vector<int>& reduced_order);

/// The canonical axes sharing the given (m-2)-candidate reduced axis: all
/// ways of inserting the two missing candidates.
std::vector<Axis> group_axes(const std::vector<int>& reduced_order, int m);

/// Insertion heuristic: candidates in decreasing approval-weight order, each
/// placed at the position minimizing the cost of the partial profile. Used
/// only to seed the incumbent; never affects the optimal set.
Axis greedy_warm_start(const WeightedProfile& profile, CostRule rule);

/// Solves each co-approval class independently and returns all concatenations
/// (every class order, every per-class optimum, every orientation). Sound only
/// for rules satisfying partition consistency; throws RuleUnsupportedError for
/// the others (VoterDeletion, MinFlips, and Genus, which fails it as soon as a
/// never-approved candidate can sit inside a multi-candidate hole).
SolveResult solve_decomposed(const WeightedProfile& profile, CostRule rule,
                             const SolveOptions& options = {});

/// LP-format (CPLEX dialect) model whose optimal objective equals the solve
/// optimum. Supported for VoterDeletion and BallotCompletion. Variable and
/// constraint ordering is deterministic.
std::string export_ilp(const WeightedProfile& profile, CostRule rule);

}  // namespace axisfit
