#pragma once

// Domain types for approval profiles and candidate axes.
//
// A profile is a weighted multiset of approval ballots over m <= 64 named
// candidates; ballots are bit vectors so interval tests run in a handful of
// word operations. An axis is a strict total order of the candidates whose
// direction is irrelevant: an axis and its reverse are the same object, and
// the lexicographically smaller of the two index sequences is the canonical
// representative. All types are immutable after construction and every
// operation is a pure function.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "axisfit/rational.hpp"

namespace axisfit {

constexpr int kMaxCandidates = 64;

struct CandidateMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyProfileError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RuleUnsupportedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParameterDomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MalformedInstanceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
    int line;
};

/// Set of candidate indices packed into a word, bit i = candidate i.
using CandidateSet = std::uint64_t;

inline int set_size(CandidateSet s) { return std::popcount(s); }
inline bool set_contains(CandidateSet s, int i) { return (s >> i) & 1; }
inline CandidateSet full_set(int m) {
    return m >= kMaxCandidates ? ~CandidateSet{0} : (CandidateSet{1} << m) - 1;
}
std::vector<int> set_members(CandidateSet s);

struct Candidate {
    int index = 0;
    std::string name;
};

/// A non-empty subset of candidates.
struct Ballot {
    CandidateSet members = 0;

    int size() const { return std::popcount(members); }
    bool contains(int candidate) const { return set_contains(members, candidate); }
    friend bool operator==(const Ballot&, const Ballot&) = default;
};

/// A strict total order of all candidates; order_[position] = candidate.
class Axis {
public:
    explicit Axis(std::vector<int> order);
    static Axis identity(int m);

    int size() const { return static_cast<int>(order_.size()); }
    int at(int position) const { return order_[position]; }
    const std::vector<std::uint8_t>& order() const { return order_; }

    /// candidate -> position lookup table.
    std::vector<std::uint8_t> positions() const;

    Axis reversed() const;

    CandidateSet candidate_set() const { return full_set(size()); }

    std::string to_string(const std::vector<std::string>& names) const;

    friend bool operator==(const Axis&, const Axis&) = default;
    friend bool operator<(const Axis& a, const Axis& b) { return a.order_ < b.order_; }

private:
    Axis() = default;
    std::vector<std::uint8_t> order_;
};

/// The smaller of an axis and its reverse, comparing index sequences
/// lexicographically. Identifies the two orientations of an axis.
Axis canonicalize(const Axis& axis);

inline bool is_canonical(const Axis& axis) {
    return axis.size() < 2 || axis.at(0) < axis.at(axis.size() - 1);
}

struct ProfileEntry {
    Ballot ballot;
    Rational weight;
};

/// Candidate registry plus weighted multiset of ballots.
class WeightedProfile {
public:
    WeightedProfile(std::vector<std::string> candidate_names, std::vector<ProfileEntry> entries);

    int num_candidates() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& candidate_names() const { return names_; }
    Candidate candidate(int index) const { return Candidate{index, names_[index]}; }
    /// Index of a name, or -1.
    int find_candidate(const std::string& name) const;

    const std::vector<ProfileEntry>& entries() const { return entries_; }
    Rational total_weight() const;

    /// Sum of weights of entries approving the candidate.
    Rational approval_score(int candidate) const;

private:
    std::vector<std::string> names_;
    std::vector<ProfileEntry> entries_;
};

/// Ballot membership per axis position: bit i = candidate at position i approved.
struct ApprovalVector {
    std::uint64_t bits = 0;
    int length = 0;

    friend bool operator==(const ApprovalVector&, const ApprovalVector&) = default;
};

ApprovalVector approval_vector(const Ballot& ballot, const Axis& axis);

/// True iff no non-member lies strictly between two members on the axis.
bool is_interval(const Ballot& ballot, const Axis& axis);

/// The candidates outside the ballot lying strictly between two members.
CandidateSet interfering_candidates(const Ballot& ballot, const Axis& axis);

/// True iff the 1-bits of the vector are contiguous (or the vector is empty).
bool ones_contiguous(std::uint64_t bits);

/// Merges identical ballots, drops ballots that are intervals of every axis
/// (singletons and the full candidate set), and sorts entries by decreasing
/// weight. Profile cost is preserved for every rule and axis.
WeightedProfile preprocess(const WeightedProfile& profile);

// --- Profile surgery used by the solver and the axiom checkers. ---

/// Concatenation of two profiles over the same candidate registry.
WeightedProfile combined(const WeightedProfile& a, const WeightedProfile& b);

/// Profile with one extra weighted ballot.
WeightedProfile with_ballot(const WeightedProfile& profile, Ballot ballot,
                            Rational weight = Rational(1));

/// Restriction to a candidate subset: kept candidates are reindexed in
/// registry order, ballots are intersected, empty entries are dropped.
WeightedProfile restricted(const WeightedProfile& profile, CandidateSet keep);

/// Restriction of an axis to a candidate subset, reindexed like restricted().
Axis restricted_axis(const Axis& axis, CandidateSet keep);

}  // namespace axisfit
