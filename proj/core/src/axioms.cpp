#include "axisfit/axioms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "axisfit/linearity.hpp"
#include "axisfit/metrics.hpp"
#include "axisfit/rng.hpp"
#include "axisfit/synthetic.hpp"

namespace axisfit {

std::string to_string(AxiomId axiom) {
    switch (axiom) {
        case AxiomId::Stability: return "stability";
        case AxiomId::BallotMonotonicity: return "ballot-monotonicity";
        case AxiomId::Clearance: return "clearance";
        case AxiomId::VetoCentrism: return "veto-centrism";
        case AxiomId::CloneProximity: return "clone-proximity";
        case AxiomId::CloneResistance: return "clone-resistance";
        case AxiomId::Heredity: return "heredity";
        case AxiomId::PartitionConsistency: return "partition-consistency";
        case AxiomId::ConsistencyWithLinearity: return "consistency-with-linearity";
    }
    return "?";
}

namespace {

SolveOptions checker_options(const SolveOptions& options) {
    SolveOptions opts = options;
    opts.use_decomposition = false;  // checkers must not assume what they verify
    opts.warm_start.reset();
    return opts;
}

std::set<Axis> axis_set(const std::vector<Axis>& axes) { return {axes.begin(), axes.end()}; }

std::string ballot_names(const WeightedProfile& profile, CandidateSet members) {
    std::string out = "{";
    bool first = true;
    for (int c : set_members(members)) {
        if (!first) out += ",";
        out += profile.candidate_names()[c];
        first = false;
    }
    return out + "}";
}

AxiomVerdict violation(AxiomWitness witness) {
    return AxiomVerdict{false, std::move(witness)};
}

AxiomVerdict check_stability(CostRule rule, const AxiomInstance& instance,
                             const SolveOptions& opts) {
    if (!instance.added_ballot) throw MalformedInstanceError("stability needs an added ballot");
    SolveResult before = solve(instance.profile, rule, opts);
    WeightedProfile after_profile = with_ballot(instance.profile, *instance.added_ballot);
    SolveResult after = solve(after_profile, rule, opts);
    std::set<Axis> before_set = axis_set(before.optimal_axes);
    for (const Axis& axis : after.optimal_axes)
        if (before_set.count(axis)) return AxiomVerdict{};
    AxiomWitness witness;
    witness.detail = "adding ballot " +
                     ballot_names(instance.profile, instance.added_ballot->members) +
                     " makes the optimal sets disjoint";
    witness.axes = after.optimal_axes;
    witness.ballot = instance.added_ballot;
    return violation(std::move(witness));
}

AxiomVerdict check_ballot_monotonicity(CostRule rule, const AxiomInstance& instance,
                                       const SolveOptions& opts) {
    const WeightedProfile& profile = instance.profile;
    SolveResult before = solve(profile, rule, opts);
    // Completing the same entry to the same interval yields the same modified
    // profile for many optimal axes; cache those solves.
    std::map<std::pair<std::size_t, CandidateSet>, std::set<Axis>> cache;
    for (const Axis& axis : before.optimal_axes) {
        auto pos = axis.positions();
        for (std::size_t k = 0; k < profile.entries().size(); ++k) {
            const Ballot& ballot = profile.entries()[k].ballot;
            if (is_interval(ballot, axis)) continue;
            // interval hull of the ballot on this axis
            int lo = axis.size(), hi = -1;
            for (int c : set_members(ballot.members)) {
                lo = std::min(lo, static_cast<int>(pos[c]));
                hi = std::max(hi, static_cast<int>(pos[c]));
            }
            CandidateSet completed = 0;
            for (int p = lo; p <= hi; ++p) completed |= CandidateSet{1} << axis.at(p);
            auto key = std::make_pair(k, completed);
            auto it = cache.find(key);
            if (it == cache.end()) {
                std::vector<ProfileEntry> entries = profile.entries();
                entries[k].ballot = Ballot{completed};
                WeightedProfile modified(profile.candidate_names(), std::move(entries));
                it = cache.emplace(key, axis_set(solve(modified, rule, opts).optimal_axes)).first;
            }
            if (!it->second.count(axis)) {
                AxiomWitness witness;
                witness.detail = "completing ballot " + ballot_names(profile, ballot.members) +
                                 " to " + ballot_names(profile, completed) + " drops axis " +
                                 axis.to_string(profile.candidate_names());
                witness.axes = {axis};
                witness.ballot = ballot;
                return violation(std::move(witness));
            }
        }
    }
    return AxiomVerdict{};
}

AxiomVerdict check_clearance(CostRule rule, const AxiomInstance& instance,
                             const SolveOptions& opts) {
    const WeightedProfile& profile = instance.profile;
    std::vector<int> never_approved;
    for (int c = 0; c < profile.num_candidates(); ++c)
        if (profile.approval_score(c).is_zero()) never_approved.push_back(c);
    if (never_approved.empty())
        throw MalformedInstanceError("clearance needs a never-approved candidate");
    SolveResult result = solve(profile, rule, opts);
    for (const Axis& axis : result.optimal_axes) {
        for (const auto& entry : profile.entries()) {
            CandidateSet interfering = interfering_candidates(entry.ballot, axis);
            for (int x : never_approved) {
                if (set_contains(interfering, x)) {
                    AxiomWitness witness;
                    witness.detail = "never-approved " + profile.candidate_names()[x] +
                                     " interferes with " +
                                     ballot_names(profile, entry.ballot.members) + " on axis " +
                                     axis.to_string(profile.candidate_names());
                    witness.axes = {axis};
                    witness.ballot = entry.ballot;
                    witness.candidate = x;
                    return violation(std::move(witness));
                }
            }
        }
    }
    return AxiomVerdict{};
}

AxiomVerdict check_veto_centrism(CostRule rule, const AxiomInstance& instance,
                                 const SolveOptions& opts) {
    const WeightedProfile& profile = instance.profile;
    int m = profile.num_candidates();
    for (const auto& entry : profile.entries())
        if (entry.ballot.size() != m - 1)
            throw MalformedInstanceError("veto centrism needs a veto profile");
    Rational best_score(0);
    for (int c = 0; c < m; ++c) best_score = std::max(best_score, profile.approval_score(c));
    SolveResult result = solve(profile, rule, opts);
    for (const Axis& axis : result.optimal_axes) {
        bool ok = false;
        for (int median : median_candidates(axis))
            if (profile.approval_score(median) == best_score) ok = true;
        if (!ok) {
            AxiomWitness witness;
            witness.detail = "median of axis " + axis.to_string(profile.candidate_names()) +
                             " is not a most-approved candidate";
            witness.axes = {axis};
            witness.candidate = median_candidates(axis).front();
            return violation(std::move(witness));
        }
    }
    return AxiomVerdict{};
}

void require_clones(const WeightedProfile& profile, std::pair<int, int> pair) {
    for (const auto& entry : profile.entries())
        if (entry.ballot.contains(pair.first) != entry.ballot.contains(pair.second))
            throw MalformedInstanceError("named pair are not clones");
}

AxiomVerdict check_clone_proximity(CostRule rule, const AxiomInstance& instance,
                                   const SolveOptions& opts) {
    if (!instance.clone_pair) throw MalformedInstanceError("clone proximity needs a clone pair");
    const WeightedProfile& profile = instance.profile;
    auto [a, b] = *instance.clone_pair;
    require_clones(profile, {a, b});
    SolveResult result = solve(profile, rule, opts);
    for (const Axis& axis : result.optimal_axes) {
        auto pos = axis.positions();
        int lo = std::min(pos[a], pos[b]);
        int hi = std::max(pos[a], pos[b]);
        for (int p = lo + 1; p < hi; ++p) {
            int x = axis.at(p);
            for (const auto& entry : profile.entries()) {
                if (entry.ballot.contains(a) && entry.ballot.contains(b) &&
                    !entry.ballot.contains(x)) {
                    AxiomWitness witness;
                    witness.detail = profile.candidate_names()[x] + " separates clones " +
                                     profile.candidate_names()[a] + "," +
                                     profile.candidate_names()[b] + " on axis " +
                                     axis.to_string(profile.candidate_names()) +
                                     " but is missing from " +
                                     ballot_names(profile, entry.ballot.members);
                    witness.axes = {axis};
                    witness.ballot = entry.ballot;
                    witness.candidate = x;
                    return violation(std::move(witness));
                }
            }
        }
    }
    return AxiomVerdict{};
}

AxiomVerdict check_clone_resistance(CostRule rule, const AxiomInstance& instance,
                                    const SolveOptions& opts) {
    if (!instance.clone_pair) throw MalformedInstanceError("clone resistance needs a clone pair");
    const WeightedProfile& profile = instance.profile;
    auto [a, removed] = *instance.clone_pair;
    require_clones(profile, {a, removed});
    CandidateSet keep = full_set(profile.num_candidates()) & ~(CandidateSet{1} << removed);
    WeightedProfile reduced_profile = restricted(profile, keep);
    SolveResult full = solve(profile, rule, opts);
    SolveResult reduced = solve(reduced_profile, rule, opts);
    std::set<Axis> reduced_set = axis_set(reduced.optimal_axes);
    std::set<Axis> restrictions;
    for (const Axis& axis : full.optimal_axes) {
        Axis restriction = canonicalize(restricted_axis(axis, keep));
        restrictions.insert(restriction);
        if (!reduced_set.count(restriction)) {
            AxiomWitness witness;
            witness.detail = "axis " + axis.to_string(profile.candidate_names()) +
                             " is optimal but its restriction " +
                             restriction.to_string(reduced_profile.candidate_names()) +
                             " is not optimal without " + profile.candidate_names()[removed];
            witness.axes = {axis};
            witness.candidate = removed;
            return violation(std::move(witness));
        }
    }
    for (const Axis& axis : reduced.optimal_axes) {
        if (!restrictions.count(axis)) {
            AxiomWitness witness;
            witness.detail = "reduced-profile optimum " +
                             axis.to_string(reduced_profile.candidate_names()) +
                             " extends to no optimal axis of the full profile";
            witness.axes = {axis};
            witness.candidate = removed;
            return violation(std::move(witness));
        }
    }
    return AxiomVerdict{};
}

AxiomVerdict check_heredity(CostRule rule, const AxiomInstance& instance,
                            const SolveOptions& opts) {
    if (!instance.subset) throw MalformedInstanceError("heredity needs a candidate subset");
    const WeightedProfile& profile = instance.profile;
    CandidateSet keep = *instance.subset & full_set(profile.num_candidates());
    if (keep == 0) throw MalformedInstanceError("heredity subset is empty");
    WeightedProfile sub_profile = restricted(profile, keep);
    SolveResult full = solve(profile, rule, opts);
    SolveResult sub = solve(sub_profile, rule, opts);
    std::set<Axis> sub_set = axis_set(sub.optimal_axes);
    for (const Axis& axis : full.optimal_axes) {
        Axis restriction = canonicalize(restricted_axis(axis, keep));
        if (!sub_set.count(restriction)) {
            AxiomWitness witness;
            witness.detail = "axis " + axis.to_string(profile.candidate_names()) +
                             " restricts to " +
                             restriction.to_string(sub_profile.candidate_names()) +
                             " which is not optimal on the candidate subset";
            witness.axes = {axis};
            return violation(std::move(witness));
        }
    }
    return AxiomVerdict{};
}

AxiomVerdict check_partition_consistency(CostRule rule, const AxiomInstance& instance,
                                         const SolveOptions& opts) {
    const WeightedProfile& profile = instance.profile;
    CandidatePartition partition = coapproval_partition(profile);
    SolveResult full = solve(profile, rule, opts);

    // expected set: every concatenation of per-class optima
    struct ClassSolution {
        std::vector<int> members;
        std::vector<Axis> axes;
    };
    std::vector<ClassSolution> classes;
    for (CandidateSet cls : partition.classes) {
        ClassSolution solution;
        solution.members = set_members(cls);
        if (solution.members.size() == 1)
            solution.axes.push_back(Axis::identity(1));
        else
            solution.axes = solve(restricted(profile, cls), rule, opts).optimal_axes;
        classes.push_back(std::move(solution));
    }
    int k = static_cast<int>(classes.size());
    int m = profile.num_candidates();
    std::vector<int> class_order(k);
    for (int i = 0; i < k; ++i) class_order[i] = i;
    std::sort(class_order.begin(), class_order.end());
    std::set<Axis> expected;
    do {
        std::vector<int> choice(k, 0), orientation(k, 0);
        while (true) {
            std::vector<int> order;
            order.reserve(m);
            for (int idx = 0; idx < k; ++idx) {
                const ClassSolution& cls = classes[class_order[idx]];
                const Axis& local = cls.axes[choice[idx]];
                int sz = local.size();
                for (int p = 0; p < sz; ++p)
                    order.push_back(
                        cls.members[orientation[idx] ? local.at(sz - 1 - p) : local.at(p)]);
            }
            expected.insert(canonicalize(Axis(std::move(order))));
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

    std::set<Axis> actual = axis_set(full.optimal_axes);
    if (actual == expected) return AxiomVerdict{};
    AxiomWitness witness;
    for (const Axis& axis : actual)
        if (!expected.count(axis)) {
            witness.detail = "optimal axis " + axis.to_string(profile.candidate_names()) +
                             " does not concatenate per-class optima";
            witness.axes = {axis};
            return violation(std::move(witness));
        }
    for (const Axis& axis : expected)
        if (!actual.count(axis)) {
            witness.detail = "concatenation " + axis.to_string(profile.candidate_names()) +
                             " of per-class optima is not optimal";
            witness.axes = {axis};
            return violation(std::move(witness));
        }
    return AxiomVerdict{};
}

AxiomVerdict check_consistency_with_linearity(CostRule rule, const AxiomInstance& instance,
                                              const SolveOptions& opts) {
    const WeightedProfile& profile = instance.profile;
    std::vector<Axis> consistent = consistent_axes(profile, opts.enumeration_bound);
    if (consistent.empty())
        throw MalformedInstanceError("consistency with linearity needs a linear profile");
    SolveResult result = solve(profile, rule, opts);
    std::set<Axis> expected = axis_set(consistent);
    std::set<Axis> actual = axis_set(result.optimal_axes);
    if (expected == actual) return AxiomVerdict{};
    AxiomWitness witness;
    witness.detail = "optimal set differs from the consistent axes";
    for (const Axis& axis : actual)
        if (!expected.count(axis)) witness.axes.push_back(axis);
    for (const Axis& axis : expected)
        if (!actual.count(axis)) witness.axes.push_back(axis);
    return violation(std::move(witness));
}

}  // namespace

AxiomVerdict check_instance(AxiomId axiom, CostRule rule, const AxiomInstance& instance,
                            const SolveOptions& options) {
    SolveOptions opts = checker_options(options);
    switch (axiom) {
        case AxiomId::Stability: return check_stability(rule, instance, opts);
        case AxiomId::BallotMonotonicity: return check_ballot_monotonicity(rule, instance, opts);
        case AxiomId::Clearance: return check_clearance(rule, instance, opts);
        case AxiomId::VetoCentrism: return check_veto_centrism(rule, instance, opts);
        case AxiomId::CloneProximity: return check_clone_proximity(rule, instance, opts);
        case AxiomId::CloneResistance: return check_clone_resistance(rule, instance, opts);
        case AxiomId::Heredity: return check_heredity(rule, instance, opts);
        case AxiomId::PartitionConsistency:
            return check_partition_consistency(rule, instance, opts);
        case AxiomId::ConsistencyWithLinearity:
            return check_consistency_with_linearity(rule, instance, opts);
    }
    throw std::invalid_argument("unknown axiom");
}

namespace {

std::vector<std::string> letter_names(int m) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    return names;
}

Ballot random_ballot(int m, Rng& rng, CandidateSet universe) {
    std::vector<int> pool = set_members(universe);
    while (true) {
        CandidateSet members = 0;
        for (int c : pool)
            if (rng.next_bool(0.45)) members |= CandidateSet{1} << c;
        if (members != 0 && set_size(members) >= 2) return Ballot{members};
    }
}

WeightedProfile random_profile(Rng& rng, int m, int entries, CandidateSet universe) {
    std::vector<ProfileEntry> list;
    for (int i = 0; i < entries; ++i)
        list.push_back({random_ballot(m, rng, universe), Rational(1 + rng.next_int(3))});
    return WeightedProfile(letter_names(m), std::move(list));
}

// Random linear profile: intervals of a hidden random axis.
WeightedProfile random_linear_profile(Rng& rng, int m, int entries) {
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    for (int i = m - 1; i > 0; --i) std::swap(order[i], order[rng.next_int(i + 1)]);
    Axis axis(order);
    std::vector<ProfileEntry> list;
    for (int i = 0; i < entries; ++i)
        list.push_back({sample_interval_ballot(axis, rng), Rational(1)});
    return WeightedProfile(letter_names(m), std::move(list));
}

AxiomInstance random_instance(AxiomId axiom, Rng& rng) {
    switch (axiom) {
        case AxiomId::Stability: {
            int m = 4 + rng.next_int(3);
            AxiomInstance instance{random_profile(rng, m, 2 + rng.next_int(5), full_set(m)),
                                   std::nullopt, std::nullopt, std::nullopt};
            instance.added_ballot = random_ballot(m, rng, full_set(m));
            return instance;
        }
        case AxiomId::BallotMonotonicity: {
            int m = 4 + rng.next_int(3);
            return {random_profile(rng, m, 2 + rng.next_int(4), full_set(m)), std::nullopt,
                    std::nullopt, std::nullopt};
        }
        case AxiomId::Clearance:
        case AxiomId::PartitionConsistency: {
            // leave the last candidate never approved
            int m = 4 + rng.next_int(3);
            CandidateSet active = full_set(m - 1);
            return {random_profile(rng, m, 2 + rng.next_int(4), active), std::nullopt,
                    std::nullopt, std::nullopt};
        }
        case AxiomId::VetoCentrism: {
            int m = 5 + rng.next_int(3);
            std::vector<ProfileEntry> list;
            int n = 3 + rng.next_int(10);
            for (int i = 0; i < n; ++i) {
                int vetoed = rng.next_int(m);
                list.push_back({Ballot{full_set(m) & ~(CandidateSet{1} << vetoed)}, Rational(1)});
            }
            return {WeightedProfile(letter_names(m), std::move(list)), std::nullopt, std::nullopt,
                    std::nullopt};
        }
        case AxiomId::CloneProximity:
        case AxiomId::CloneResistance: {
            int base = 3 + rng.next_int(3);
            WeightedProfile seed_profile =
                random_profile(rng, base, 2 + rng.next_int(4), full_set(base));
            int a = rng.next_int(base);
            int clone = base;  // appended candidate mirrors a everywhere
            std::vector<ProfileEntry> list;
            for (const auto& entry : seed_profile.entries()) {
                CandidateSet members = entry.ballot.members;
                if (set_contains(members, a)) members |= CandidateSet{1} << clone;
                list.push_back({Ballot{members}, entry.weight});
            }
            return {WeightedProfile(letter_names(base + 1), std::move(list)), std::nullopt,
                    std::make_pair(a, clone), std::nullopt};
        }
        case AxiomId::Heredity: {
            int m = 4 + rng.next_int(3);
            WeightedProfile profile = random_profile(rng, m, 2 + rng.next_int(4), full_set(m));
            CandidateSet subset = 0;
            while (set_size(subset) < 2) subset = rng.next_below(full_set(m)) + 1;
            return {std::move(profile), std::nullopt, std::nullopt, subset};
        }
        case AxiomId::ConsistencyWithLinearity: {
            int m = 4 + rng.next_int(3);
            return {random_linear_profile(rng, m, 2 + rng.next_int(5)), std::nullopt, std::nullopt,
                    std::nullopt};
        }
    }
    throw std::invalid_argument("unknown axiom");
}

}  // namespace

std::optional<Counterexample> search_counterexample(AxiomId axiom, CostRule rule, int budget,
                                                    std::uint64_t seed,
                                                    const SolveOptions& options) {
    if (budget <= 0) throw std::invalid_argument("budget must be positive");
    Rng rng(seed);
    for (int trial = 0; trial < budget; ++trial) {
        AxiomInstance instance = random_instance(axiom, rng);
        AxiomVerdict verdict = check_instance(axiom, rule, instance, options);
        if (!verdict.holds) return Counterexample{std::move(instance), std::move(*verdict.witness)};
    }
    return std::nullopt;
}

namespace {

// Small builder for hand-picked profiles: names registered in first-use
// order, ballots written as name lists.
WeightedProfile named_profile(const std::vector<std::string>& names,
                              const std::vector<std::pair<long, std::vector<std::string>>>& rows) {
    std::vector<ProfileEntry> entries;
    for (const auto& [weight, ballot_names] : rows) {
        CandidateSet members = 0;
        for (const auto& name : ballot_names) {
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) throw std::invalid_argument("unknown fixture candidate");
            members |= CandidateSet{1} << (it - names.begin());
        }
        entries.push_back({Ballot{members}, Rational(weight)});
    }
    return WeightedProfile(names, std::move(entries));
}

int name_index(const WeightedProfile& profile, const std::string& name) {
    int idx = profile.find_candidate(name);
    if (idx < 0) throw std::invalid_argument("unknown fixture candidate");
    return idx;
}

}  // namespace

std::vector<NamedInstance> fixture_instances(AxiomId axiom) {
    std::vector<NamedInstance> out;
    switch (axiom) {
        case AxiomId::Stability: {
            WeightedProfile profile = named_profile(
                {"a", "b", "c", "d", "e", "f"},
                {{1, {"a", "b", "e"}}, {1, {"a", "b", "c", "e"}}, {1, {"b", "c", "d", "e", "f"}}});
            Ballot added{0};
            for (const char* n : {"a", "b", "d", "f"})
                added.members |= CandidateSet{1} << name_index(profile, n);
            out.push_back({"linear-profile-plus-spanning-ballot",
                           AxiomInstance{std::move(profile), added, std::nullopt, std::nullopt}});
            break;
        }
        case AxiomId::BallotMonotonicity: {
            // every 4-subset of 6 candidates, once
            std::vector<std::pair<long, std::vector<std::string>>> rows;
            std::vector<std::string> names = {"a", "b", "c", "d", "e", "f"};
            for (int mask = 1; mask < 64; ++mask) {
                if (std::popcount(static_cast<unsigned>(mask)) != 4) continue;
                std::vector<std::string> ballot;
                for (int c = 0; c < 6; ++c)
                    if ((mask >> c) & 1) ballot.push_back(names[c]);
                rows.push_back({1, ballot});
            }
            out.push_back({"all-four-subsets-of-six",
                           AxiomInstance{named_profile(names, rows), std::nullopt, std::nullopt,
                                         std::nullopt}});
            break;
        }
        case AxiomId::Clearance: {
            WeightedProfile profile =
                named_profile({"a", "b", "c", "d", "e"},
                              {{1, {"a", "b"}}, {1, {"a", "c"}}, {1, {"a", "d"}}});
            out.push_back({"star-with-idle-candidate",
                           AxiomInstance{std::move(profile), std::nullopt, std::nullopt,
                                         std::nullopt}});
            break;
        }
        case AxiomId::VetoCentrism: {
            // veto counts 1..5: most approved is a, least approved are d and e
            std::vector<std::string> names = {"a", "b", "c", "d", "e"};
            std::vector<std::pair<long, std::vector<std::string>>> rows;
            long veto_count = 1;
            for (const auto& vetoed : names) {
                std::vector<std::string> ballot;
                for (const auto& n : names)
                    if (n != vetoed) ballot.push_back(n);
                rows.push_back({veto_count++, ballot});
            }
            out.push_back({"graded-veto-profile",
                           AxiomInstance{named_profile(names, rows), std::nullopt, std::nullopt,
                                         std::nullopt}});
            break;
        }
        case AxiomId::CloneProximity: {
            WeightedProfile triangle = named_profile(
                {"x", "y", "p", "q", "r"},
                {{2, {"p", "q"}}, {2, {"q", "r"}}, {1, {"x", "y", "p", "r"}}});
            out.push_back({"clone-spanned-triangle",
                           AxiomInstance{triangle, std::nullopt,
                                         std::make_pair(name_index(triangle, "x"),
                                                        name_index(triangle, "y")),
                                         std::nullopt}});
            WeightedProfile cycle = named_profile(
                {"a", "b", "x", "y", "p", "q"},
                {{1, {"a", "b", "p", "q"}}, {1, {"p", "q", "x", "y"}}, {1, {"x", "y", "a", "b"}}});
            out.push_back({"three-clone-pairs-cycle",
                           AxiomInstance{cycle, std::nullopt,
                                         std::make_pair(name_index(cycle, "x"),
                                                        name_index(cycle, "y")),
                                         std::nullopt}});
            break;
        }
        case AxiomId::CloneResistance: {
            WeightedProfile bc_profile = named_profile(
                {"a", "a2", "b", "c"},
                {{3, {"b", "a", "a2"}}, {4, {"c", "a", "a2"}}, {2, {"b", "c"}}});
            out.push_back({"two-hub-clone",
                           AxiomInstance{bc_profile, std::nullopt,
                                         std::make_pair(name_index(bc_profile, "a"),
                                                        name_index(bc_profile, "a2")),
                                         std::nullopt}});
            WeightedProfile mf_profile = named_profile(
                {"a", "b", "c", "d", "e", "f"},
                {{2, {"a", "d", "e", "f"}}, {3, {"b", "e"}}, {3, {"a", "b", "c", "f"}}});
            out.push_back({"two-companion-clone",
                           AxiomInstance{mf_profile, std::nullopt,
                                         std::make_pair(name_index(mf_profile, "a"),
                                                        name_index(mf_profile, "f")),
                                         std::nullopt}});
            WeightedProfile chain = named_profile(
                {"a", "a2", "b", "c", "d"},
                {{3, {"a", "a2", "b"}}, {3, {"b", "c"}}, {1, {"a", "a2", "c", "d"}}});
            out.push_back({"chain-with-cloned-end",
                           AxiomInstance{chain, std::nullopt,
                                         std::make_pair(name_index(chain, "a"),
                                                        name_index(chain, "a2")),
                                         std::nullopt}});
            break;
        }
        case AxiomId::Heredity: {
            WeightedProfile profile = named_profile(
                {"a", "b", "c", "d"}, {{1, {"a", "b"}}, {1, {"a", "c"}}, {1, {"a", "d"}}});
            CandidateSet subset = 0;
            for (const char* n : {"a", "b", "c"})
                subset |= CandidateSet{1} << name_index(profile, n);
            out.push_back({"star-drop-one-leaf",
                           AxiomInstance{std::move(profile), std::nullopt, std::nullopt, subset}});
            break;
        }
        case AxiomId::PartitionConsistency: {
            WeightedProfile blocks = named_profile({"a", "b", "c", "d", "w", "x", "y", "z"},
                                                   {{5, {"a", "b", "c"}},
                                                    {4, {"c", "d"}},
                                                    {3, {"x", "y"}},
                                                    {2, {"w", "x", "y"}},
                                                    {1, {"a", "b", "d"}},
                                                    {1, {"a", "c"}},
                                                    {1, {"w", "y", "z"}}});
            out.push_back({"two-block-profile",
                           AxiomInstance{std::move(blocks), std::nullopt, std::nullopt,
                                         std::nullopt}});
            WeightedProfile star = named_profile(
                {"a", "b", "c", "d", "e"},
                {{1, {"a", "b"}}, {1, {"a", "c"}}, {1, {"a", "d"}}});
            out.push_back({"star-with-idle-candidate",
                           AxiomInstance{std::move(star), std::nullopt, std::nullopt,
                                         std::nullopt}});
            break;
        }
        case AxiomId::ConsistencyWithLinearity: {
            WeightedProfile profile = named_profile(
                {"a", "b", "c", "d", "e", "f"},
                {{1, {"a", "b", "e"}}, {1, {"a", "b", "c", "e"}}, {1, {"b", "c", "d", "e", "f"}}});
            out.push_back({"three-interval-ballots",
                           AxiomInstance{std::move(profile), std::nullopt, std::nullopt,
                                         std::nullopt}});
            break;
        }
    }
    return out;
}

}  // namespace axisfit
