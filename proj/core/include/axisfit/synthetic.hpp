#pragma once

// Noise-model profile generators. Each model draws a ground-truth axis and
// samples ballots i.i.d. around it:
//
//   Maverick    with probability p a voter ignores the axis and approves a
//               uniform non-empty candidate subset; otherwise a uniform
//               interval of the axis.
//   Flips       uniform interval, then every candidate's approval status is
//               flipped independently with probability p.
//   Omissions   uniform interval, then every approved candidate is dropped
//               independently with probability p.
//   Swaps       a perturbed axis is drawn from a Mallows model with dispersion
//               phi around the truth, then a uniform interval of it.
//   Noisy       voters and candidates get i.i.d. uniform positions on [0,1];
//               voter v perceives candidate c at p(c) + N(0, sigma) and
//               approves those within radius r; the paired ranking orders
//               candidates by perceived distance. The truth axis sorts
//               candidates by position.
//
// Ballots that come out empty are resampled for that voter. Equal seeds
// produce identical samples.

#include <optional>

#include "axisfit/core.hpp"
#include "axisfit/ranking.hpp"
#include "axisfit/rng.hpp"

namespace axisfit {

enum class NoiseModel {
    Maverick,
    Flips,
    Omissions,
    Swaps,
    Noisy,
};

std::string to_string(NoiseModel model);

struct NoiseModelConfig {
    NoiseModel model = NoiseModel::Maverick;
    double p = 0.0;       // Maverick / Flips / Omissions, in [0, 1/2)
    double phi = 0.0;     // Swaps, in [0, 1]
    double sigma = 0.0;   // Noisy, >= 0
    double radius = 0.0;  // Noisy, > 0
    int m = 0;
    int n = 0;
    std::uint64_t seed = 0;
};

struct GroundTruthSample {
    Axis truth;
    WeightedProfile profile;
    std::optional<RankingProfile> rankings;        // Noisy only
    std::vector<double> candidate_positions;       // Noisy only
    std::vector<double> voter_positions;           // Noisy only
};

/// Uniform over the m(m+1)/2 non-empty intervals of the axis.
Ballot sample_interval_ballot(const Axis& axis, Rng& rng);

/// Exact Mallows draw via repeated insertion.
Axis mallows_sample(const Axis& center, double phi, Rng& rng);

GroundTruthSample generate(const NoiseModelConfig& config);

}  // namespace axisfit
