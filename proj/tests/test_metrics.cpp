#include <doctest.h>

#include "axisfit/metrics.hpp"
#include "test_util.hpp"

using namespace axisfit;
using namespace testutil;

TEST_CASE("kendall tau counts discordant pairs") {
    CHECK(kendall_tau(axis_of("abc"), axis_of("abc")) == 0);
    CHECK(kendall_tau(axis_of("abc"), axis_of("bac")) == 1);
    CHECK(kendall_tau(axis_of("abc"), axis_of("cba")) == 3);
    CHECK_THROWS_AS(kendall_tau(axis_of("abc"), axis_of("abcd")), CandidateMismatchError);
}

TEST_CASE("axis distance is reversal-minimized") {
    CHECK(axis_distance(axis_of("abc"), axis_of("cba")) == 0);
    CHECK(axis_distance(axis_of("abcd"), axis_of("badc")) == 2);

    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        int m = 2 + rng.next_int(8);
        Axis a = random_axis(rng, m);
        Axis b = random_axis(rng, m);
        long d = axis_distance(a, b);
        CHECK(d == std::min(kendall_tau(a, b), kendall_tau(a, b.reversed())));
        CHECK(d <= m * (m - 1) / 4);
        CHECK(d == axis_distance(canonicalize(a), canonicalize(b)));
        CHECK(d == axis_distance(b, a));
    }
}

TEST_CASE("worst-case distances at eleven and twelve candidates") {
    // reverse a prefix of length 8 (28 inversions): min(28, 55-28) = 27
    std::vector<int> order11 = {7, 6, 5, 4, 3, 2, 1, 0, 8, 9, 10};
    CHECK(axis_distance(Axis::identity(11), Axis(order11)) == 27);

    // 28 prefix inversions plus 5 in the tail: min(33, 66-33) = 33
    std::vector<int> order12 = {7, 6, 5, 4, 3, 2, 1, 0, 11, 10, 8, 9};
    CHECK(axis_distance(Axis::identity(12), Axis(order12)) == 33);

    // nothing exceeds the bound
    Rng rng(6);
    for (int trial = 0; trial < 500; ++trial) {
        Axis b = random_axis(rng, 11);
        CHECK(axis_distance(Axis::identity(11), b) <= 27);
        Axis c = random_axis(rng, 12);
        CHECK(axis_distance(Axis::identity(12), c) <= 33);
    }
}

TEST_CASE("axis distance is a pseudometric, metric on reversal classes") {
    Rng rng(8);
    for (int trial = 0; trial < 1000; ++trial) {
        int m = 3 + rng.next_int(6);
        Axis a = random_axis(rng, m);
        Axis b = random_axis(rng, m);
        Axis c = random_axis(rng, m);
        CHECK(axis_distance(a, a) == 0);
        CHECK(axis_distance(a, a.reversed()) == 0);
        CHECK(axis_distance(a, b) == axis_distance(b, a));
        CHECK(axis_distance(a, c) <= axis_distance(a, b) + axis_distance(b, c));
        if (axis_distance(a, b) == 0) CHECK(canonicalize(a) == canonicalize(b));
    }
}

TEST_CASE("average distance over returned axes") {
    SolveResult result;
    result.optimal_axes = {axis_of("abcd")};
    CHECK(avg_distance_to_truth(result, axis_of("abcd")) == 0.0);

    result.optimal_axes = {axis_of("abcd"), axis_of("acdb")};
    // distances 0 and 2
    CHECK(avg_distance_to_truth(result, axis_of("abcd")) == doctest::Approx(1.0));

    // the tied four-candidate axes: moving d inward one slot costs one swap,
    // two slots cost two, so the mean is 3/2
    result.optimal_axes = {axis_of("adbc"), axis_of("abdc")};
    CHECK(axis_distance(axis_of("adbc"), axis_of("abcd")) == 2);
    CHECK(axis_distance(axis_of("abdc"), axis_of("abcd")) == 1);
    CHECK(avg_distance_to_truth(result, axis_of("abcd")) == doctest::Approx(1.5));
}

TEST_CASE("median candidates") {
    CHECK(median_candidates(axis_of("abcde")) == std::vector<int>{2});
    CHECK(median_candidates(axis_of("abcdef")) == std::vector<int>{2, 3});
    CHECK(median_candidates(axis_of("a")) == std::vector<int>{0});
    CHECK(median_candidates(axis_of("badce")) == std::vector<int>{3});
}
