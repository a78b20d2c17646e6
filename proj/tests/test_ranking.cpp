#include <doctest.h>

#include "axisfit/ranking.hpp"
#include "axisfit/synthetic.hpp"
#include "axisfit/metrics.hpp"
#include "test_util.hpp"

using namespace axisfit;
using namespace testutil;

namespace {

RankingBallot rank_of(const std::string& s) {
    std::vector<std::uint8_t> order;
    for (char c : s) order.push_back(static_cast<std::uint8_t>(c - 'a'));
    return RankingBallot{order};
}

RankingBallot random_ranking(Rng& rng, int m) {
    std::vector<std::uint8_t> order(m);
    for (int i = 0; i < m; ++i) order[i] = static_cast<std::uint8_t>(i);
    for (int i = m - 1; i > 0; --i) std::swap(order[i], order[rng.next_int(i + 1)]);
    return RankingBallot{order};
}

// single-peakedness via the forbidden-triple characterization
bool single_peaked_by_triples(const RankingBallot& r, const Axis& axis) {
    std::vector<int> rank(axis.size());
    for (int i = 0; i < r.size(); ++i) rank[r.order[i]] = i;
    int m = axis.size();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                int rj = rank[axis.at(j)];
                if (rj > rank[axis.at(i)] && rj > rank[axis.at(k)]) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("single-peaked rankings") {
    Axis abc = Axis::identity(3);
    CHECK(is_single_peaked(rank_of("abc"), abc));
    CHECK(is_single_peaked(rank_of("bac"), abc));
    CHECK(is_single_peaked(rank_of("bca"), abc));
    CHECK(!is_single_peaked(rank_of("acb"), abc));  // prefix {a,c} is not an interval
    CHECK(is_single_peaked(rank_of("cba"), abc));   // peak at the right end
}

TEST_CASE("ranking costs") {
    Axis abc = Axis::identity(3);
    CHECK(ranking_cost(RankingRule::VoterDeletion, rank_of("bac"), abc) == 0);
    CHECK(ranking_cost(RankingRule::VoterDeletion, rank_of("acb"), abc) == 1);
    CHECK(ranking_cost(RankingRule::ForbiddenTriples, rank_of("acb"), abc) == 1);
    CHECK(ranking_cost(RankingRule::ForbiddenTriples, rank_of("cba"), abc) == 0);

    // deeper example: count triples directly
    Axis abcde = Axis::identity(5);
    RankingBallot r = rank_of("ecadb");
    long expected = 0;
    std::vector<int> rank(5);
    for (int i = 0; i < 5; ++i) rank[r.order[i]] = i;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k)
                if (rank[j] > rank[i] && rank[j] > rank[k]) ++expected;
    CHECK(ranking_cost(RankingRule::ForbiddenTriples, r, abcde) == expected);
}

TEST_CASE("zero cost coincides with single-peakedness, both rules") {
    Rng rng(64);
    for (int trial = 0; trial < 400; ++trial) {
        int m = 3 + rng.next_int(4);
        Axis axis = random_axis(rng, m);
        RankingBallot r = random_ranking(rng, m);
        bool sp = is_single_peaked(r, axis);
        CHECK(sp == (ranking_cost(RankingRule::ForbiddenTriples, r, axis) == 0));
        CHECK(sp == (ranking_cost(RankingRule::VoterDeletion, r, axis) == 0));
        CHECK(sp == single_peaked_by_triples(r, axis));
        // reversal symmetry
        for (RankingRule rule : {RankingRule::VoterDeletion, RankingRule::ForbiddenTriples})
            CHECK(ranking_cost(rule, r, axis) == ranking_cost(rule, r, axis.reversed()));
    }
}

TEST_CASE("solving a single ranking yields its single-peaked axes at cost zero") {
    std::vector<RankingEntry> entries = {{rank_of("cabde"), Rational(1)}};
    RankingProfile profile(letters(5), entries);
    SolveResult result = solve_ranking(profile, RankingRule::ForbiddenTriples);
    CHECK(result.optimal_cost == Rational(0));
    for (const Axis& axis : result.optimal_axes)
        CHECK(is_single_peaked(rank_of("cabde"), axis));

    SolveResult vd = solve_ranking(profile, RankingRule::VoterDeletion);
    CHECK(vd.optimal_cost == Rational(0));
    CHECK(axis_set_letters(vd.optimal_axes) == axis_set_letters(result.optimal_axes));
}

TEST_CASE("ranking solver equals naive enumeration") {
    Rng rng(123);
    for (int trial = 0; trial < 25; ++trial) {
        int m = 4 + rng.next_int(3);
        std::vector<RankingEntry> entries;
        int n = 2 + rng.next_int(5);
        for (int i = 0; i < n; ++i)
            entries.push_back({random_ranking(rng, m), Rational(1 + rng.next_int(2))});
        RankingProfile profile(letters(m), entries);
        for (RankingRule rule : {RankingRule::VoterDeletion, RankingRule::ForbiddenTriples}) {
            SolveResult fast = solve_ranking(profile, rule);
            // direct scan over canonical axes
            Rational best;
            std::set<std::string> optima;
            bool first = true;
            for_canonical_axes(m, [&](const Axis& axis) {
                Rational cost = ranking_profile_cost(rule, profile, axis);
                if (first || cost < best) {
                    best = cost;
                    optima.clear();
                    first = false;
                }
                if (cost == best) optima.insert(axis_letters(axis));
            });
            CHECK(fast.optimal_cost == best);
            CHECK(axis_set_letters(fast.optimal_axes) == optima);
        }
    }
}

TEST_CASE("noisy samples recover the axis under ft-rank but not vd-rank") {
    double ft_total = 0, vd_total = 0;
    const int samples = 100;
    for (int i = 0; i < samples; ++i) {
        NoiseModelConfig config;
        config.model = NoiseModel::Noisy;
        config.sigma = 0.1;
        config.radius = 0.4;
        config.m = 7;
        config.n = 100;
        config.seed = Rng::mix(31337, i);
        GroundTruthSample sample = generate(config);
        REQUIRE(sample.rankings.has_value());
        ft_total += avg_distance_to_truth(
            solve_ranking(*sample.rankings, RankingRule::ForbiddenTriples), sample.truth);
        vd_total += avg_distance_to_truth(
            solve_ranking(*sample.rankings, RankingRule::VoterDeletion), sample.truth);
    }
    CHECK(ft_total / samples < 1.0);
    CHECK(vd_total / samples > ft_total / samples);
}
