#include "axisfit/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace axisfit {

std::string to_string(NoiseModel model) {
    switch (model) {
        case NoiseModel::Maverick: return "maverick";
        case NoiseModel::Flips: return "flips";
        case NoiseModel::Omissions: return "omissions";
        case NoiseModel::Swaps: return "swaps";
        case NoiseModel::Noisy: return "noisy";
    }
    return "?";
}

Ballot sample_interval_ballot(const Axis& axis, Rng& rng) {
    int m = axis.size();
    // index a uniform (lo, hi) pair with lo <= hi
    std::uint64_t total = static_cast<std::uint64_t>(m) * (m + 1) / 2;
    std::uint64_t t = rng.next_below(total);
    int lo = 0;
    std::uint64_t row = static_cast<std::uint64_t>(m);
    while (t >= row) {
        t -= row;
        --row;
        ++lo;
    }
    int hi = lo + static_cast<int>(t);
    CandidateSet members = 0;
    for (int p = lo; p <= hi; ++p) members |= CandidateSet{1} << axis.at(p);
    return Ballot{members};
}

Axis mallows_sample(const Axis& center, double phi, Rng& rng) {
    if (phi < 0.0 || phi > 1.0) throw ParameterDomainError("mallows dispersion must be in [0,1]");
    int m = center.size();
    std::vector<int> order;
    order.reserve(m);
    order.push_back(center.at(0));
    // insert item i at slot j in [0, i], probability proportional to phi^(i-j)
    for (int i = 1; i < m; ++i) {
        int slot;
        if (phi == 1.0) {
            slot = rng.next_int(i + 1);
        } else if (phi == 0.0) {
            slot = i;
        } else {
            double z = (1.0 - std::pow(phi, i + 1)) / (1.0 - phi);
            double u = rng.next_real() * z;
            double acc = 0.0;
            slot = 0;
            for (int j = i; j >= 0; --j) {
                acc += std::pow(phi, i - j);
                if (u <= acc) {
                    slot = j;
                    break;
                }
            }
        }
        order.insert(order.begin() + slot, center.at(i));
    }
    return Axis(std::move(order));
}

namespace {

Axis random_axis(int m, Rng& rng) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    for (int i = m - 1; i > 0; --i) {
        int j = rng.next_int(i + 1);
        std::swap(order[i], order[j]);
    }
    return Axis(std::move(order));
}

std::vector<std::string> default_names(int m) {
    std::vector<std::string> names;
    names.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (m <= 26) {
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        } else {
            names.push_back("c" + std::to_string(i));
        }
    }
    return names;
}

constexpr int kMaxResampleAttempts = 1 << 20;

Ballot non_empty_or_resample(Rng& rng, const std::function<CandidateSet()>& draw) {
    for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
        CandidateSet members = draw();
        if (members != 0) return Ballot{members};
    }
    throw ParameterDomainError("ballot resampling failed to produce a non-empty ballot");
}

}  // namespace

GroundTruthSample generate(const NoiseModelConfig& config) {
    if (config.m < 1 || config.m > kMaxCandidates)
        throw ParameterDomainError("candidate count out of range");
    if (config.n < 0) throw ParameterDomainError("voter count must be non-negative");
    switch (config.model) {
        case NoiseModel::Maverick:
        case NoiseModel::Flips:
        case NoiseModel::Omissions:
            if (config.p < 0.0 || config.p >= 0.5)
                throw ParameterDomainError("noise probability must be in [0, 1/2)");
            break;
        case NoiseModel::Swaps:
            if (config.phi < 0.0 || config.phi > 1.0)
                throw ParameterDomainError("dispersion must be in [0, 1]");
            break;
        case NoiseModel::Noisy:
            if (config.sigma < 0.0) throw ParameterDomainError("sigma must be non-negative");
            if (config.radius <= 0.0) throw ParameterDomainError("radius must be positive");
            break;
    }

    Rng rng(config.seed);
    int m = config.m;
    CandidateSet everyone = full_set(m);

    if (config.model == NoiseModel::Noisy) {
        std::vector<double> cand_pos(m);
        for (double& x : cand_pos) x = rng.next_real();
        // truth axis: candidates sorted by position
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return cand_pos[a] < cand_pos[b]; });
        Axis truth(std::move(order));

        std::vector<ProfileEntry> approvals;
        std::vector<RankingEntry> rankings;
        std::vector<double> voter_pos;
        approvals.reserve(config.n);
        for (int v = 0; v < config.n; ++v) {
            for (int attempt = 0;; ++attempt) {
                if (attempt >= kMaxResampleAttempts)
                    throw ParameterDomainError("empty approval sets persist; radius too small");
                double pv = rng.next_real();
                std::vector<double> dist(m);
                CandidateSet approved = 0;
                for (int c = 0; c < m; ++c) {
                    double perceived = cand_pos[c] + config.sigma * rng.next_gaussian();
                    dist[c] = std::abs(pv - perceived);
                    if (dist[c] <= config.radius) approved |= CandidateSet{1} << c;
                }
                if (approved == 0) continue;  // resample this voter
                voter_pos.push_back(pv);
                approvals.push_back({Ballot{approved}, Rational(1)});
                std::vector<std::uint8_t> by_distance(m);
                std::iota(by_distance.begin(), by_distance.end(), 0);
                std::stable_sort(by_distance.begin(), by_distance.end(),
                                 [&](int a, int b) { return dist[a] < dist[b]; });
                rankings.push_back({RankingBallot{std::move(by_distance)}, Rational(1)});
                break;
            }
        }
        GroundTruthSample sample{
            truth,
            WeightedProfile(default_names(m), std::move(approvals)),
            RankingProfile(default_names(m), std::move(rankings)),
            std::move(cand_pos),
            std::move(voter_pos),
        };
        return sample;
    }

    Axis truth = random_axis(m, rng);
    std::vector<ProfileEntry> entries;
    entries.reserve(config.n);
    for (int v = 0; v < config.n; ++v) {
        Ballot ballot;
        switch (config.model) {
            case NoiseModel::Maverick:
                if (rng.next_bool(config.p)) {
                    // uniform non-empty subset
                    ballot = Ballot{1 + rng.next_below(everyone)};
                } else {
                    ballot = sample_interval_ballot(truth, rng);
                }
                break;
            case NoiseModel::Flips:
                ballot = non_empty_or_resample(rng, [&] {
                    CandidateSet members = sample_interval_ballot(truth, rng).members;
                    for (int c = 0; c < m; ++c)
                        if (rng.next_bool(config.p)) members ^= CandidateSet{1} << c;
                    return members;
                });
                break;
            case NoiseModel::Omissions:
                ballot = non_empty_or_resample(rng, [&] {
                    CandidateSet members = sample_interval_ballot(truth, rng).members;
                    for (int c : set_members(members))
                        if (rng.next_bool(config.p)) members &= ~(CandidateSet{1} << c);
                    return members;
                });
                break;
            case NoiseModel::Swaps: {
                Axis perturbed = mallows_sample(truth, config.phi, rng);
                ballot = sample_interval_ballot(perturbed, rng);
                break;
            }
            case NoiseModel::Noisy:
                break;  // handled above
        }
        entries.push_back({ballot, Rational(1)});
    }
    return GroundTruthSample{truth, WeightedProfile(default_names(m), std::move(entries)),
                             std::nullopt, {}, {}};
}

}  // namespace axisfit
