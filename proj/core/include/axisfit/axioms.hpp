#pragma once

// Executable verifiers for the behavioural properties of the cost rules, on
// concrete instances: a profile plus whatever the property quantifies over
// (an extra ballot, a clone pair, a candidate subset). Universally quantified
// inner conditions are checked against the full set of optimal axes, computed
// by exact solves with decomposition disabled so the checkers stay independent
// of the property they test. A randomized search produces violating instances
// for rule/property pairs that fail; every returned instance re-verifies.

#include <optional>
#include <utility>

#include "axisfit/core.hpp"
#include "axisfit/costs.hpp"
#include "axisfit/solver.hpp"

namespace axisfit {

enum class AxiomId {
    Stability,
    BallotMonotonicity,
    Clearance,
    VetoCentrism,
    CloneProximity,
    CloneResistance,
    Heredity,
    PartitionConsistency,
    ConsistencyWithLinearity,
};

constexpr AxiomId kAllAxioms[] = {
    AxiomId::Stability,      AxiomId::BallotMonotonicity,
    AxiomId::Clearance,      AxiomId::VetoCentrism,
    AxiomId::CloneProximity, AxiomId::CloneResistance,
    AxiomId::Heredity,       AxiomId::PartitionConsistency,
    AxiomId::ConsistencyWithLinearity,
};

std::string to_string(AxiomId axiom);

struct AxiomInstance {
    WeightedProfile profile;
    std::optional<Ballot> added_ballot;             // Stability
    std::optional<std::pair<int, int>> clone_pair;  // clone axioms; .second is deleted
    std::optional<CandidateSet> subset;             // Heredity
};

struct AxiomWitness {
    std::string detail;
    std::vector<Axis> axes;            // offending axes, canonical
    std::optional<Ballot> ballot;
    std::optional<int> candidate;
};

struct AxiomVerdict {
    bool holds = true;
    std::optional<AxiomWitness> witness;  // present iff holds is false
};

AxiomVerdict check_instance(AxiomId axiom, CostRule rule, const AxiomInstance& instance,
                            const SolveOptions& options = {});

struct Counterexample {
    AxiomInstance instance;
    AxiomWitness witness;
};

/// Tries `budget` random instances; the first violating one is returned.
std::optional<Counterexample> search_counterexample(AxiomId axiom, CostRule rule, int budget,
                                                    std::uint64_t seed,
                                                    const SolveOptions& options = {});

struct NamedInstance {
    std::string name;
    AxiomInstance instance;
};

/// Hand-picked instances known to separate the rules on this axiom.
std::vector<NamedInstance> fixture_instances(AxiomId axiom);

}  // namespace axisfit
