#include "axisfit/linearity.hpp"

#include <algorithm>
#include <numeric>

namespace axisfit {

namespace {

// Walks all canonical axes (first candidate < last candidate) in lexicographic
// order of the position->candidate sequence, invoking visit(order). visit
// returns false to stop early.
template <typename Visit>
void for_each_canonical_axis(int m, Visit&& visit) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    do {
        if (m >= 2 && order.front() > order.back()) continue;
        if (!visit(order)) return;
    } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace

std::vector<Axis> consistent_axes(const WeightedProfile& profile, int bound) {
    int m = profile.num_candidates();
    if (m > bound)
        throw SizeLimitError("profile has " + std::to_string(m) +
                             " candidates, enumeration bound is " + std::to_string(bound));
    const auto& entries = profile.entries();
    std::vector<Axis> out;
    for_each_canonical_axis(m, [&](const std::vector<int>& order) {
        Axis axis(order);
        auto pos = axis.positions();
        for (const auto& entry : entries) {
            std::uint64_t bits = 0;
            CandidateSet members = entry.ballot.members;
            while (members != 0) {
                int c = std::countr_zero(members);
                bits |= std::uint64_t{1} << pos[c];
                members &= members - 1;
            }
            if (!ones_contiguous(bits)) return true;  // next axis
        }
        out.push_back(axis);
        return true;
    });
    return out;
}

bool is_linear(const WeightedProfile& profile, int bound) {
    int m = profile.num_candidates();
    if (m > bound)
        throw SizeLimitError("profile has " + std::to_string(m) +
                             " candidates, enumeration bound is " + std::to_string(bound));
    if (m <= 2 || profile.entries().size() <= 2) return true;
    bool found = false;
    for_each_canonical_axis(m, [&](const std::vector<int>& order) {
        Axis axis(order);
        auto pos = axis.positions();
        for (const auto& entry : profile.entries()) {
            std::uint64_t bits = 0;
            CandidateSet members = entry.ballot.members;
            while (members != 0) {
                int c = std::countr_zero(members);
                bits |= std::uint64_t{1} << pos[c];
                members &= members - 1;
            }
            if (!ones_contiguous(bits)) return true;
        }
        found = true;
        return false;  // one consistent axis is enough
    });
    return found;
}

CandidatePartition coapproval_partition(const WeightedProfile& profile) {
    int m = profile.num_candidates();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& entry : profile.entries()) {
        auto members = set_members(entry.ballot.members);
        for (std::size_t i = 1; i < members.size(); ++i) {
            int a = find(members[0]);
            int b = find(members[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<CandidateSet> classes(m, 0);
    for (int c = 0; c < m; ++c) classes[find(c)] |= CandidateSet{1} << c;
    CandidatePartition out;
    for (int c = 0; c < m; ++c)
        if (classes[c] != 0) out.classes.push_back(classes[c]);
    return out;
}

}  // namespace axisfit
