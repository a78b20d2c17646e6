#include "axisfit/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace axisfit {

std::string RuleId::name() const {
    if (ranking) return to_string(rank);
    return to_string(cost);
}

RuleId RuleId::parse(const std::string& name) {
    for (const RuleId& rule : all())
        if (rule.name() == name) return rule;
    throw RuleUnsupportedError("unknown rule: " + name);
}

std::vector<RuleId> RuleId::all() {
    std::vector<RuleId> out;
    for (CostRule rule : kAllCostRules) out.push_back(RuleId{false, rule, RankingRule::VoterDeletion});
    out.push_back(RuleId{true, CostRule::VoterDeletion, RankingRule::VoterDeletion});
    out.push_back(RuleId{true, CostRule::VoterDeletion, RankingRule::ForbiddenTriples});
    return out;
}

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

struct NameRegistry {
    std::vector<std::string> names;

    int intern(const std::string& name, int line) {
        if (name.empty()) throw ParseError(line, "empty candidate name");
        if (name.find_first_of(",>:#") != std::string::npos)
            throw ParseError(line, "candidate name contains a reserved character: " + name);
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        if (static_cast<int>(names.size()) >= kMaxCandidates)
            throw ParseError(line, "too many candidates");
        names.push_back(name);
        return static_cast<int>(names.size()) - 1;
    }
};

}  // namespace

ParsedProfile parse_profile(std::istream& in) {
    NameRegistry registry;
    std::vector<ProfileEntry> approvals;
    std::vector<std::pair<std::vector<int>, Rational>> rankings;
    bool saw_approval = false, saw_ranking = false;

    std::string raw;
    int line_number = 0;
    while (std::getline(in, raw)) {
        ++line_number;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trimmed(line);
        if (line.empty()) continue;

        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(line_number, "expected '<weight> : <ballot>'");
        Rational weight;
        try {
            weight = Rational::from_decimal(trimmed(line.substr(0, colon)));
        } catch (const std::exception&) {
            throw ParseError(line_number, "malformed weight: " + trimmed(line.substr(0, colon)));
        }
        if (!(Rational(0) < weight)) throw ParseError(line_number, "weights must be positive");

        std::string body = trimmed(line.substr(colon + 1));
        if (body.empty()) throw ParseError(line_number, "empty ballot");
        bool is_ranking = body.find('>') != std::string::npos;
        if (is_ranking) {
            if (saw_approval) throw ParseError(line_number, "ranking line in an approval file");
            saw_ranking = true;
            std::vector<int> order;
            CandidateSet seen = 0;
            for (const std::string& part : split(body, '>')) {
                int c = registry.intern(trimmed(part), line_number);
                if (set_contains(seen, c))
                    throw ParseError(line_number, "candidate repeated in ranking");
                seen |= CandidateSet{1} << c;
                order.push_back(c);
            }
            rankings.push_back({std::move(order), weight});
        } else {
            if (saw_ranking) throw ParseError(line_number, "approval line in a ranking file");
            saw_approval = true;
            CandidateSet members = 0;
            for (const std::string& part : split(body, ',')) {
                int c = registry.intern(trimmed(part), line_number);
                if (set_contains(members, c))
                    throw ParseError(line_number, "candidate repeated in ballot");
                members |= CandidateSet{1} << c;
            }
            approvals.push_back({Ballot{members}, weight});
        }
    }
    if (registry.names.empty()) throw ParseError(line_number, "no ballots in file");

    if (saw_ranking) {
        int m = static_cast<int>(registry.names.size());
        std::vector<RankingEntry> entries;
        for (auto& [order, weight] : rankings) {
            if (static_cast<int>(order.size()) != m)
                throw ParseError(line_number, "ranking does not list every declared candidate");
            std::vector<std::uint8_t> bytes(order.begin(), order.end());
            entries.push_back({RankingBallot{std::move(bytes)}, weight});
        }
        return RankingProfile(std::move(registry.names), std::move(entries));
    }
    return WeightedProfile(std::move(registry.names), std::move(approvals));
}

ParsedProfile parse_profile_text(const std::string& text) {
    std::istringstream in(text);
    return parse_profile(in);
}

namespace {

// weights in files are decimals; emit them exactly
std::string weight_literal(const Rational& w) {
    std::int64_t den = w.den();
    int twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) return w.to_string();  // non-decimal weight, keep exact n/d form
    int digits = std::max(twos, fives);
    __int128 scaled = w.num();
    for (int i = 0; i < digits; ++i) scaled *= 10;
    scaled /= w.den();
    std::string body;
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    if (scaled == 0) body = "0";
    while (scaled > 0) {
        body += static_cast<char>('0' + static_cast<int>(scaled % 10));
        scaled /= 10;
    }
    while (static_cast<int>(body.size()) <= digits) body += '0';
    std::reverse(body.begin(), body.end());
    if (digits > 0) body.insert(body.size() - digits, ".");
    return (negative ? "-" : "") + body;
}

}  // namespace

std::string write_profile(const WeightedProfile& profile) {
    std::string out;
    for (const auto& entry : profile.entries()) {
        out += weight_literal(entry.weight);
        out += " : ";
        bool first = true;
        for (int c : set_members(entry.ballot.members)) {
            if (!first) out += ',';
            out += profile.candidate_names()[c];
            first = false;
        }
        out += '\n';
    }
    return out;
}

std::string write_profile(const RankingProfile& profile) {
    std::string out;
    for (const auto& entry : profile.entries()) {
        out += weight_literal(entry.weight);
        out += " : ";
        bool first = true;
        for (int c : entry.ballot.order) {
            if (!first) out += '>';
            out += profile.candidate_names()[c];
            first = false;
        }
        out += '\n';
    }
    return out;
}

std::string result_document(const std::string& rule_name, const SolveResult& result,
                            const std::vector<std::string>& names, double wall_time_ms,
                            const ResultDocumentOptions& doc_options) {
    nlohmann::ordered_json doc;
    doc["rule"] = rule_name;
    doc["optimal_cost"] = result.optimal_cost.to_string();
    nlohmann::ordered_json axes = nlohmann::ordered_json::array();
    for (const Axis& axis : result.optimal_axes) {
        nlohmann::ordered_json one = nlohmann::ordered_json::array();
        for (int p = 0; p < axis.size(); ++p) one.push_back(names[axis.at(p)]);
        axes.push_back(std::move(one));
        if (!doc_options.all_optimal) break;
    }
    doc["optimal_axes"] = std::move(axes);
    if (!doc_options.per_axis_costs.empty()) {
        nlohmann::ordered_json costs = nlohmann::ordered_json::object();
        for (const auto& [axis, cost] : doc_options.per_axis_costs)
            costs[axis.to_string(names)] = cost.to_string();
        doc["per_axis_costs"] = std::move(costs);
    }
    doc["axes_examined"] = result.axes_examined;
    doc["axes_pruned"] = result.axes_pruned;
    doc["wall_time_ms"] = wall_time_ms;
    return doc.dump(2) + "\n";
}

}  // namespace axisfit
