#include "axisfit/core.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace axisfit {

std::vector<int> set_members(CandidateSet s) {
    std::vector<int> out;
    out.reserve(std::popcount(s));
    while (s != 0) {
        int i = std::countr_zero(s);
        out.push_back(i);
        s &= s - 1;
    }
    return out;
}

Axis::Axis(std::vector<int> order) {
    int m = static_cast<int>(order.size());
    if (m < 1 || m > kMaxCandidates) throw std::invalid_argument("Axis: size out of range");
    CandidateSet seen = 0;
    order_.reserve(order.size());
    for (int c : order) {
        if (c < 0 || c >= m || set_contains(seen, c))
            throw std::invalid_argument("Axis: not a permutation");
        seen |= CandidateSet{1} << c;
        order_.push_back(static_cast<std::uint8_t>(c));
    }
}

Axis Axis::identity(int m) {
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    return Axis(std::move(order));
}

std::vector<std::uint8_t> Axis::positions() const {
    std::vector<std::uint8_t> pos(order_.size());
    for (std::size_t p = 0; p < order_.size(); ++p) pos[order_[p]] = static_cast<std::uint8_t>(p);
    return pos;
}

Axis Axis::reversed() const {
    Axis out;
    out.order_.assign(order_.rbegin(), order_.rend());
    return out;
}

std::string Axis::to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (std::size_t p = 0; p < order_.size(); ++p) {
        if (p > 0) out += ',';
        out += names.at(order_[p]);
    }
    return out;
}

Axis canonicalize(const Axis& axis) {
    Axis rev = axis.reversed();
    return rev < axis ? rev : axis;
}

WeightedProfile::WeightedProfile(std::vector<std::string> candidate_names,
                                 std::vector<ProfileEntry> entries)
    : names_(std::move(candidate_names)), entries_(std::move(entries)) {
    int m = static_cast<int>(names_.size());
    if (m < 1) throw EmptyProfileError("profile has no candidates");
    if (m > kMaxCandidates) throw SizeLimitError("profile exceeds 64 candidates");
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
        if (name.empty()) throw std::invalid_argument("empty candidate name");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate candidate name: " + name);
    }
    CandidateSet all = full_set(m);
    for (const auto& entry : entries_) {
        if (entry.ballot.members == 0)
            throw std::invalid_argument("ballots must be non-empty");
        if ((entry.ballot.members & ~all) != 0)
            throw CandidateMismatchError("ballot references unregistered candidate");
        if (entry.weight < Rational(0))
            throw std::invalid_argument("ballot weights must be non-negative");
    }
}

int WeightedProfile::find_candidate(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

Rational WeightedProfile::total_weight() const {
    Rational total(0);
    for (const auto& entry : entries_) total += entry.weight;
    return total;
}

Rational WeightedProfile::approval_score(int candidate) const {
    Rational total(0);
    for (const auto& entry : entries_)
        if (entry.ballot.contains(candidate)) total += entry.weight;
    return total;
}

namespace {

void check_ballot_fits(const Ballot& ballot, const Axis& axis) {
    if ((ballot.members & ~axis.candidate_set()) != 0)
        throw CandidateMismatchError("ballot references a candidate absent from the axis");
}

std::uint64_t permuted_bits(CandidateSet members, const std::vector<std::uint8_t>& pos) {
    std::uint64_t bits = 0;
    while (members != 0) {
        int c = std::countr_zero(members);
        bits |= std::uint64_t{1} << pos[c];
        members &= members - 1;
    }
    return bits;
}

}  // namespace

ApprovalVector approval_vector(const Ballot& ballot, const Axis& axis) {
    check_ballot_fits(ballot, axis);
    return ApprovalVector{permuted_bits(ballot.members, axis.positions()), axis.size()};
}

bool ones_contiguous(std::uint64_t bits) {
    if (bits == 0) return true;
    std::uint64_t filled = bits | (bits - 1);  // low zeros filled in
    return (filled & (filled + 1)) == 0;
}

bool is_interval(const Ballot& ballot, const Axis& axis) {
    return ones_contiguous(approval_vector(ballot, axis).bits);
}

CandidateSet interfering_candidates(const Ballot& ballot, const Axis& axis) {
    check_ballot_fits(ballot, axis);
    auto pos = axis.positions();
    std::uint64_t bits = permuted_bits(ballot.members, pos);
    if (bits == 0) return 0;
    int lo = std::countr_zero(bits);
    int hi = 63 - std::countl_zero(bits);
    std::uint64_t span = lo == 0 && hi == 63 ? ~std::uint64_t{0}
                                             : ((std::uint64_t{1} << (hi - lo + 1)) - 1) << lo;
    std::uint64_t holes = span & ~bits;
    CandidateSet out = 0;
    while (holes != 0) {
        int p = std::countr_zero(holes);
        out |= CandidateSet{1} << axis.at(p);
        holes &= holes - 1;
    }
    return out;
}

WeightedProfile preprocess(const WeightedProfile& profile) {
    int m = profile.num_candidates();
    CandidateSet everyone = full_set(m);
    std::map<CandidateSet, Rational> merged;
    for (const auto& entry : profile.entries()) {
        if (entry.ballot.size() <= 1) continue;      // interval of every axis
        if (entry.ballot.members == everyone) continue;
        auto [it, inserted] = merged.emplace(entry.ballot.members, entry.weight);
        if (!inserted) it->second += entry.weight;
    }
    std::vector<ProfileEntry> entries;
    entries.reserve(merged.size());
    for (const auto& [members, weight] : merged) entries.push_back({Ballot{members}, weight});
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.weight != b.weight) return b.weight < a.weight;
        return a.ballot.members < b.ballot.members;
    });
    return WeightedProfile(profile.candidate_names(), std::move(entries));
}

WeightedProfile combined(const WeightedProfile& a, const WeightedProfile& b) {
    if (a.candidate_names() != b.candidate_names())
        throw CandidateMismatchError("profiles have different candidate registries");
    std::vector<ProfileEntry> entries = a.entries();
    entries.insert(entries.end(), b.entries().begin(), b.entries().end());
    return WeightedProfile(a.candidate_names(), std::move(entries));
}

WeightedProfile with_ballot(const WeightedProfile& profile, Ballot ballot, Rational weight) {
    std::vector<ProfileEntry> entries = profile.entries();
    entries.push_back({ballot, weight});
    return WeightedProfile(profile.candidate_names(), std::move(entries));
}

WeightedProfile restricted(const WeightedProfile& profile, CandidateSet keep) {
    std::vector<int> kept = set_members(keep & full_set(profile.num_candidates()));
    if (kept.empty()) throw EmptyProfileError("restriction keeps no candidates");
    std::vector<int> new_index(profile.num_candidates(), -1);
    std::vector<std::string> names;
    names.reserve(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        new_index[kept[i]] = static_cast<int>(i);
        names.push_back(profile.candidate_names()[kept[i]]);
    }
    std::vector<ProfileEntry> entries;
    for (const auto& entry : profile.entries()) {
        CandidateSet inside = entry.ballot.members & keep;
        if (inside == 0) continue;
        CandidateSet remapped = 0;
        for (int c : set_members(inside)) remapped |= CandidateSet{1} << new_index[c];
        entries.push_back({Ballot{remapped}, entry.weight});
    }
    return WeightedProfile(std::move(names), std::move(entries));
}

Axis restricted_axis(const Axis& axis, CandidateSet keep) {
    std::vector<int> kept = set_members(keep & axis.candidate_set());
    if (kept.empty()) throw std::invalid_argument("restriction keeps no candidates");
    std::vector<int> new_index(axis.size(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) new_index[kept[i]] = static_cast<int>(i);
    std::vector<int> order;
    order.reserve(kept.size());
    for (int p = 0; p < axis.size(); ++p) {
        int c = axis.at(p);
        if (set_contains(keep, c)) order.push_back(new_index[c]);
    }
    return Axis(std::move(order));
}

}  // namespace axisfit
