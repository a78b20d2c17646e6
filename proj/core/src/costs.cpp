#include "axisfit/costs.hpp"

#include <bit>

namespace axisfit {

std::string to_string(CostRule rule) {
    switch (rule) {
        case CostRule::VoterDeletion: return "vd";
        case CostRule::MinFlips: return "mf";
        case CostRule::BallotCompletion: return "bc";
        case CostRule::MinSwaps: return "ms";
        case CostRule::ForbiddenTriples: return "ft";
        case CostRule::Genus: return "genus";
    }
    return "?";
}

namespace {

// MinFlips closed form: minimize, over member anchor positions i <= j, the
// members outside [i, j] (removed) plus the holes inside [i, j] (added).
// With prefix member counts this is k + (j - i + 1) - 2*(members in [i, j]),
// which a single left-to-right scan minimizes by tracking the best
// 2*prefix(i) - i over anchors i seen so far.
long min_flips(std::uint64_t bits, int lo, int hi, int k) {
    long best = k;  // degenerate: keep one member, remove the rest
    long prefix = 0;
    long best_left = 0;
    for (int p = lo; p <= hi; ++p) {
        bool member = (bits >> p) & 1;
        if (member) {
            long left_term = 2 * prefix - p;
            if (left_term < best_left || p == lo) best_left = left_term;
            ++prefix;
            long cost = k + (p + 1) - 2 * prefix + best_left;
            if (cost < best) best = cost;
        }
    }
    return best;
}

}  // namespace

long vector_cost(CostRule rule, std::uint64_t bits, int length) {
    if (bits == 0) return 0;
    if (ones_contiguous(bits)) return 0;
    int lo = std::countr_zero(bits);
    int hi = 63 - std::countl_zero(bits);
    int k = std::popcount(bits);
    switch (rule) {
        case CostRule::VoterDeletion:
            return 1;
        case CostRule::BallotCompletion:
            return (hi - lo + 1) - k;
        case CostRule::Genus:
            // maximal runs of members, minus one
            return std::popcount(bits & ~(bits >> 1)) - 1;
        case CostRule::MinFlips:
            return min_flips(bits, lo, hi, k);
        case CostRule::MinSwaps:
        case CostRule::ForbiddenTriples: {
            long total = 0;
            long left = 1;  // members strictly left of position p
            for (int p = lo + 1; p < hi; ++p) {
                if ((bits >> p) & 1) {
                    ++left;
                } else {
                    long right = k - left;
                    total += rule == CostRule::MinSwaps ? std::min(left, right) : left * right;
                }
            }
            return total;
        }
    }
    return 0;
}

long ballot_cost(CostRule rule, const Ballot& ballot, const Axis& axis) {
    ApprovalVector v = approval_vector(ballot, axis);
    return vector_cost(rule, v.bits, v.length);
}

Rational profile_cost(CostRule rule, const WeightedProfile& profile, const Axis& axis) {
    if (profile.num_candidates() != axis.size())
        throw CandidateMismatchError("profile and axis have different candidate counts");
    auto pos = axis.positions();
    Rational total(0);
    for (const auto& entry : profile.entries()) {
        std::uint64_t bits = 0;
        CandidateSet members = entry.ballot.members;
        while (members != 0) {
            int c = std::countr_zero(members);
            bits |= std::uint64_t{1} << pos[c];
            members &= members - 1;
        }
        long cost = vector_cost(rule, bits, axis.size());
        if (cost != 0) total += entry.weight * Rational(cost);
    }
    return total;
}

}  // namespace axisfit
