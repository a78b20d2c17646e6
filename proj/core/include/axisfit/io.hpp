#pragma once

// Text formats shared by the CLI and the tests.
//
// Profile files are UTF-8 text, one weighted ballot per line:
//
//   # comment
//   <weight> : <c1>,<c2>,...     approval ballot
//   <weight> : <c1>><c2>>...     ranking, best candidate first
//
// Weights are positive decimals. Candidate names are declared implicitly by
// first use and keep that order, so output documents are stable across runs.
// A file is either all approvals or all rankings.

#include <iosfwd>
#include <string>
#include <variant>

#include "axisfit/core.hpp"
#include "axisfit/costs.hpp"
#include "axisfit/ranking.hpp"
#include "axisfit/solver.hpp"

namespace axisfit {

/// Rule selector spanning approval and ranking rules, as spelled on the
/// command line: vd, mf, bc, ms, ft, genus, vd-rank, ft-rank.
struct RuleId {
    bool ranking = false;
    CostRule cost = CostRule::VoterDeletion;
    RankingRule rank = RankingRule::VoterDeletion;

    std::string name() const;
    /// Throws RuleUnsupportedError for unrecognized names.
    static RuleId parse(const std::string& name);
    static std::vector<RuleId> all();
};

using ParsedProfile = std::variant<WeightedProfile, RankingProfile>;

ParsedProfile parse_profile(std::istream& in);
ParsedProfile parse_profile_text(const std::string& text);

std::string write_profile(const WeightedProfile& profile);
std::string write_profile(const RankingProfile& profile);

struct ResultDocumentOptions {
    bool all_optimal = true;  // otherwise only the first optimal axis is listed
    std::vector<std::pair<Axis, Rational>> per_axis_costs;  // emitted when non-empty
};

/// JSON result document for a solve run. Axes are arrays of candidate names
/// in canonical orientation. Costs are exact "n" or "n/d" strings.
std::string result_document(const std::string& rule_name, const SolveResult& result,
                            const std::vector<std::string>& names, double wall_time_ms,
                            const ResultDocumentOptions& doc_options = {});

}  // namespace axisfit
