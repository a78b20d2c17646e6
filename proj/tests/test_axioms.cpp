#include <doctest.h>

#include "axisfit/axioms.hpp"
#include "test_util.hpp"

using namespace axisfit;
using namespace testutil;

namespace {

AxiomVerdict fixture_verdict(AxiomId axiom, CostRule rule, std::size_t index = 0) {
    auto fixtures = fixture_instances(axiom);
    REQUIRE(fixtures.size() > index);
    return check_instance(axiom, rule, fixtures[index].instance);
}

}  // namespace

TEST_CASE("stability: satisfied by voter deletion only") {
    for (CostRule rule : {CostRule::MinFlips, CostRule::BallotCompletion, CostRule::MinSwaps,
                          CostRule::ForbiddenTriples}) {
        AxiomVerdict verdict = fixture_verdict(AxiomId::Stability, rule);
        CHECK(!verdict.holds);
        REQUIRE(verdict.witness.has_value());
        // the fixture's new optimum separates c and e from the old axes
        CHECK(!verdict.witness->axes.empty());
    }
    CHECK(fixture_verdict(AxiomId::Stability, CostRule::VoterDeletion).holds);

    // vd holds on random instances
    CHECK(!search_counterexample(AxiomId::Stability, CostRule::VoterDeletion, 200, 11));
    // the gradual rules fall to random search as well
    CHECK(search_counterexample(AxiomId::Stability, CostRule::ForbiddenTriples, 400, 12));
}

TEST_CASE("stability fixture pins the after-profile optimum") {
    auto fixtures = fixture_instances(AxiomId::Stability);
    const AxiomInstance& instance = fixtures[0].instance;
    WeightedProfile after = with_ballot(instance.profile, *instance.added_ballot);
    SolveOptions opts;
    for (CostRule rule : {CostRule::MinFlips, CostRule::BallotCompletion}) {
        SolveResult result = solve(after, rule, opts);
        CHECK(result.optimal_cost == Rational(1));
        CHECK(axis_set_letters(result.optimal_axes)
                  .count(axis_letters(canonicalize(axis_of("ceabfd")))));
    }
    CHECK(solve(after, CostRule::MinSwaps).optimal_cost == Rational(2));
    CHECK(solve(after, CostRule::ForbiddenTriples).optimal_cost == Rational(6));
}

TEST_CASE("ballot monotonicity: satisfied by vd and bc, failed by mf, ms, ft") {
    CHECK(fixture_verdict(AxiomId::BallotMonotonicity, CostRule::VoterDeletion).holds);
    CHECK(fixture_verdict(AxiomId::BallotMonotonicity, CostRule::BallotCompletion).holds);
    for (CostRule rule : {CostRule::MinFlips, CostRule::MinSwaps, CostRule::ForbiddenTriples}) {
        CHECK(!fixture_verdict(AxiomId::BallotMonotonicity, rule).holds);
        CHECK(search_counterexample(AxiomId::BallotMonotonicity, rule, 600, 91));
    }
    for (CostRule rule : {CostRule::VoterDeletion, CostRule::BallotCompletion})
        CHECK(!search_counterexample(AxiomId::BallotMonotonicity, rule, 150, 92));
}

TEST_CASE("clearance: bc, ms, ft clean; vd and mf leave the idle candidate inside") {
    for (CostRule rule : {CostRule::VoterDeletion, CostRule::MinFlips}) {
        AxiomVerdict verdict = fixture_verdict(AxiomId::Clearance, rule);
        CHECK(!verdict.holds);
        REQUIRE(verdict.witness.has_value());
        CHECK(verdict.witness->candidate == 4);  // "e"
    }
    for (CostRule rule :
         {CostRule::BallotCompletion, CostRule::MinSwaps, CostRule::ForbiddenTriples}) {
        CHECK(fixture_verdict(AxiomId::Clearance, rule).holds);
        CHECK(!search_counterexample(AxiomId::Clearance, rule, 150, 21));
    }
    CHECK(search_counterexample(AxiomId::Clearance, CostRule::VoterDeletion, 150, 22));

    WeightedProfile no_idle = profile_of(3, {{1, {0, 1, 2}}});
    CHECK_THROWS_AS(check_instance(AxiomId::Clearance, CostRule::VoterDeletion,
                                   AxiomInstance{no_idle, {}, {}, {}}),
                    MalformedInstanceError);
}

TEST_CASE("veto winner centrism: ms and ft center the least vetoed candidate") {
    for (CostRule rule : {CostRule::MinSwaps, CostRule::ForbiddenTriples}) {
        CHECK(fixture_verdict(AxiomId::VetoCentrism, rule).holds);
        CHECK(!search_counterexample(AxiomId::VetoCentrism, rule, 120, 31));
    }
    for (CostRule rule :
         {CostRule::VoterDeletion, CostRule::MinFlips, CostRule::BallotCompletion})
        CHECK(!fixture_verdict(AxiomId::VetoCentrism, rule).holds);

    WeightedProfile not_veto = profile_of(4, {{1, {0, 1}}});
    CHECK_THROWS_AS(check_instance(AxiomId::VetoCentrism, CostRule::MinSwaps,
                                   AxiomInstance{not_veto, {}, {}, {}}),
                    MalformedInstanceError);
}

TEST_CASE("clone proximity: only ft keeps clones adjacent on every optimum") {
    // first fixture defeats vd, mf, bc
    for (CostRule rule :
         {CostRule::VoterDeletion, CostRule::MinFlips, CostRule::BallotCompletion}) {
        AxiomVerdict verdict = fixture_verdict(AxiomId::CloneProximity, rule, 0);
        CHECK(!verdict.holds);
    }
    // second fixture defeats ms
    CHECK(!fixture_verdict(AxiomId::CloneProximity, CostRule::MinSwaps, 1).holds);
    // ft passes both fixtures and random search
    CHECK(fixture_verdict(AxiomId::CloneProximity, CostRule::ForbiddenTriples, 0).holds);
    CHECK(fixture_verdict(AxiomId::CloneProximity, CostRule::ForbiddenTriples, 1).holds);
    CHECK(!search_counterexample(AxiomId::CloneProximity, CostRule::ForbiddenTriples, 150, 41));

    WeightedProfile not_clones = profile_of(3, {{1, {0, 1}}, {1, {0, 2}}});
    CHECK_THROWS_AS(check_instance(AxiomId::CloneProximity, CostRule::ForbiddenTriples,
                                   AxiomInstance{not_clones, {}, std::make_pair(1, 2), {}}),
                    MalformedInstanceError);
}

TEST_CASE("clone resistance: only vd survives deleting a clone") {
    CHECK(fixture_verdict(AxiomId::CloneResistance, CostRule::VoterDeletion, 0).holds);
    CHECK(fixture_verdict(AxiomId::CloneResistance, CostRule::VoterDeletion, 1).holds);
    CHECK(fixture_verdict(AxiomId::CloneResistance, CostRule::VoterDeletion, 2).holds);
    CHECK(!search_counterexample(AxiomId::CloneResistance, CostRule::VoterDeletion, 200, 51));

    CHECK(!fixture_verdict(AxiomId::CloneResistance, CostRule::BallotCompletion, 0).holds);
    CHECK(!fixture_verdict(AxiomId::CloneResistance, CostRule::MinFlips, 1).holds);
    CHECK(!fixture_verdict(AxiomId::CloneResistance, CostRule::ForbiddenTriples, 2).holds);
    CHECK(!fixture_verdict(AxiomId::CloneResistance, CostRule::MinSwaps, 2).holds);

    // the genus rule also resists cloning
    CHECK(!search_counterexample(AxiomId::CloneResistance, CostRule::Genus, 200, 52));
}

TEST_CASE("heredity fails for every rule") {
    for (CostRule rule : kAllCostRules) CHECK(!fixture_verdict(AxiomId::Heredity, rule).holds);
}

TEST_CASE("partition consistency: bc, ms, ft decompose; vd, mf, genus do not") {
    for (CostRule rule :
         {CostRule::BallotCompletion, CostRule::MinSwaps, CostRule::ForbiddenTriples}) {
        CHECK(fixture_verdict(AxiomId::PartitionConsistency, rule, 0).holds);
        CHECK(fixture_verdict(AxiomId::PartitionConsistency, rule, 1).holds);
        CHECK(!search_counterexample(AxiomId::PartitionConsistency, rule, 100, 61));
    }
    // vd and mf fail already on the clearance star
    CHECK(!fixture_verdict(AxiomId::PartitionConsistency, CostRule::VoterDeletion, 1).holds);
    CHECK(!fixture_verdict(AxiomId::PartitionConsistency, CostRule::MinFlips, 1).holds);
    CHECK(search_counterexample(AxiomId::PartitionConsistency, CostRule::MinFlips, 120, 62));
    // genus lets an idle candidate sit inside a wide hole
    CHECK(!fixture_verdict(AxiomId::PartitionConsistency, CostRule::Genus, 1).holds);
}

TEST_CASE("consistency with linearity holds for every rule") {
    for (CostRule rule : kAllCostRules) {
        CHECK(fixture_verdict(AxiomId::ConsistencyWithLinearity, rule).holds);
        CHECK(!search_counterexample(AxiomId::ConsistencyWithLinearity, rule, 100, 71));
    }
    WeightedProfile star = profile_of(4, {{1, {0, 1}}, {1, {0, 2}}, {1, {0, 3}}});
    CHECK_THROWS_AS(check_instance(AxiomId::ConsistencyWithLinearity, CostRule::VoterDeletion,
                                   AxiomInstance{star, {}, {}, {}}),
                    MalformedInstanceError);
}

TEST_CASE("returned counterexamples re-verify") {
    struct Case {
        AxiomId axiom;
        CostRule rule;
    };
    std::vector<Case> cases = {
        {AxiomId::Stability, CostRule::BallotCompletion},
        {AxiomId::Clearance, CostRule::MinFlips},
        {AxiomId::CloneResistance, CostRule::ForbiddenTriples},
        {AxiomId::Heredity, CostRule::MinSwaps},
    };
    for (const Case& c : cases) {
        auto found = search_counterexample(c.axiom, c.rule, 400, 81);
        REQUIRE(found.has_value());
        AxiomVerdict again = check_instance(c.axiom, c.rule, found->instance);
        CHECK(!again.holds);
        REQUIRE(again.witness.has_value());
    }
}
