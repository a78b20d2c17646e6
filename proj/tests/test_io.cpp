#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "axisfit/experiment.hpp"
#include "axisfit/io.hpp"
#include "json_schema.hpp"
#include "lp_eval.hpp"
#include "test_util.hpp"

using namespace axisfit;
using namespace testutil;

namespace {

nlohmann::json load_schema(const char* name) {
    const char* root = std::getenv("AXISFIT_SOURCE_DIR");
    REQUIRE(root != nullptr);
    std::ifstream in(std::string(root) + "/schema/" + name);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("profile files parse with implicit candidate declaration") {
    auto parsed = parse_profile_text(
        "# two ballots\n"
        "2 : x,y\n"
        "1.5 : y,z\n");
    auto& profile = std::get<WeightedProfile>(parsed);
    CHECK(profile.candidate_names() == std::vector<std::string>{"x", "y", "z"});
    REQUIRE(profile.entries().size() == 2);
    CHECK(profile.entries()[0].weight == Rational(2));
    CHECK(profile.entries()[1].weight == Rational(3, 2));
    CHECK(profile.entries()[1].ballot == ballot({1, 2}));
}

TEST_CASE("ranking files parse") {
    auto parsed = parse_profile_text("1 : a>b>c\n2 : c>a>b\n");
    auto& profile = std::get<RankingProfile>(parsed);
    CHECK(profile.num_candidates() == 3);
    REQUIRE(profile.entries().size() == 2);
    CHECK(profile.entries()[1].ballot.order == std::vector<std::uint8_t>{2, 0, 1});
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        try {
            parse_profile_text(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("x:\n", 1);
    expect_line("1 : a,b\n-2 : b,c\n", 2);
    expect_line("1 : a,b\n1 : \n", 2);
    expect_line("1 : a,a\n", 1);
    expect_line("1 : a,b\n1 : a>b\n", 2);       // mixed ballot kinds
    expect_line("1 : a>b>c\n1 : a>b\n", 2);     // incomplete ranking
    expect_line("# only comments\n", 1);
}

TEST_CASE("parse, write, parse is a fixed point") {
    // files declare candidates implicitly, so the invariant starts from a
    // parsed profile: writing and re-parsing it changes nothing semantically
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 3 + rng.next_int(5);
        WeightedProfile seed_profile = random_profile(rng, m, 2 + rng.next_int(6));
        auto first = std::get<WeightedProfile>(parse_profile_text(write_profile(seed_profile)));
        auto parsed = std::get<WeightedProfile>(parse_profile_text(write_profile(first)));
        WeightedProfile a = preprocess(first);
        WeightedProfile b = preprocess(parsed);
        REQUIRE(a.entries().size() == b.entries().size());
        // map names of b to indices of a
        std::vector<int> remap(b.num_candidates());
        for (int c = 0; c < b.num_candidates(); ++c)
            remap[c] = a.find_candidate(b.candidate_names()[c]);
        std::set<std::pair<CandidateSet, std::string>> left, right;
        for (const auto& entry : a.entries())
            left.insert({entry.ballot.members, entry.weight.to_string()});
        for (const auto& entry : b.entries()) {
            CandidateSet members = 0;
            for (int c : set_members(entry.ballot.members))
                members |= CandidateSet{1} << remap[c];
            right.insert({members, entry.weight.to_string()});
        }
        CHECK(left == right);
    }
}

TEST_CASE("rule ids cover the command-line names") {
    CHECK(RuleId::parse("vd").cost == CostRule::VoterDeletion);
    CHECK(RuleId::parse("genus").cost == CostRule::Genus);
    CHECK(RuleId::parse("vd-rank").ranking);
    CHECK(RuleId::parse("ft-rank").rank == RankingRule::ForbiddenTriples);
    CHECK_THROWS_AS(RuleId::parse("xx"), RuleUnsupportedError);
    CHECK(RuleId::all().size() == 8);
}

TEST_CASE("result documents validate against the committed schema") {
    nlohmann::json schema = load_schema("result.schema.json");
    WeightedProfile profile = profile_of(
        4, {{4, {1, 2, 3}}, {4, {0, 1}}, {3, {0, 3}}, {1, {0, 2}}, {1, {1, 2}}});
    SolveResult result = solve(profile, CostRule::ForbiddenTriples);
    ResultDocumentOptions options;
    options.all_optimal = true;
    for_canonical_axes(4, [&](const Axis& axis) {
        options.per_axis_costs.push_back(
            {axis, profile_cost(CostRule::ForbiddenTriples, profile, axis)});
    });
    std::string text =
        result_document("ft", result, profile.candidate_names(), 1.25, options);
    nlohmann::json doc = nlohmann::json::parse(text);
    std::string error;
    CHECK_MESSAGE(schematest::validate(schema, doc, &error), error);
    CHECK(doc["optimal_cost"] == "6");
    CHECK(doc["optimal_axes"].size() == 2);
    CHECK(doc["per_axis_costs"].size() == 12);

    // axes always appear in canonical orientation
    for (const auto& axis : doc["optimal_axes"]) {
        std::vector<int> order;
        for (const auto& name : axis) order.push_back(profile.find_candidate(name));
        CHECK(is_canonical(Axis(order)));
    }
}

TEST_CASE("exported models parse as LP format") {
    WeightedProfile profile = profile_of(4, {{2, {0, 2}}, {1, {1, 3}}, {3, {0, 1, 3}}});
    for (CostRule rule : {CostRule::VoterDeletion, CostRule::BallotCompletion}) {
        lptest::Model model = lptest::parse_lp(export_ilp(profile, rule));
        CHECK(!model.objective.empty());
        CHECK(!model.constraints.empty());
        CHECK(!model.binaries.empty());
        // ordering constraints: antisymmetry on all 6 pairs, transitivity on 24 triples
        int antisym = 0, trans = 0;
        for (const auto& constraint : model.constraints) {
            if (constraint.name.rfind("antisym_", 0) == 0) ++antisym;
            if (constraint.name.rfind("trans_", 0) == 0) ++trans;
        }
        CHECK(antisym == 6);
        CHECK(trans == 24);
    }
    // deterministic output
    CHECK(export_ilp(profile, CostRule::VoterDeletion) ==
          export_ilp(profile, CostRule::VoterDeletion));
}

TEST_CASE("experiment rows and csv schema") {
    ExperimentSpec spec;
    spec.config.model = NoiseModel::Maverick;
    spec.config.p = 0.2;
    spec.config.m = 5;
    spec.config.n = 30;
    spec.config.seed = 5;
    spec.rules = {RuleId::parse("vd"), RuleId::parse("ft")};
    spec.replicates = 4;
    auto rows = run_experiment(spec);
    CHECK(rows.size() == 8);
    std::string csv = to_csv(rows);
    CHECK(csv.rfind("model,params,rule,replicate,distance\n", 0) == 0);
    CHECK(csv.find("maverick,p=0.2,vd,0,") != std::string::npos);
    CHECK(csv.find("\r") == std::string::npos);  // LF only

    // empty runs emit only the header
    spec.replicates = 0;
    CHECK(to_csv(run_experiment(spec)) == "model,params,rule,replicate,distance\n");

    // ranking rules need the noisy model
    spec.replicates = 1;
    spec.rules = {RuleId::parse("vd-rank")};
    CHECK_THROWS_AS(run_experiment(spec), ParameterDomainError);
}
