#include <algorithm>
#include <sstream>

#include "axisfit/solver.hpp"

namespace axisfit {

namespace {

// Exact decimal rendering; LP files cannot carry fractions, so weights must
// have terminating decimal expansions (file-format weights always do).
std::string decimal_string(const Rational& r) {
    std::int64_t den = r.den();
    int twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1)
        throw std::invalid_argument("weight " + r.to_string() +
                                    " has no terminating decimal expansion");
    int digits = std::max(twos, fives);
    __int128 scaled = r.num();
    for (int i = 0; i < digits; ++i) scaled *= 10;
    scaled /= r.den();
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string body;
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

std::string var_x(int a, int b) {
    return "x_" + std::to_string(a) + "_" + std::to_string(b);
}

void emit_header(std::ostringstream& out, const WeightedProfile& profile, const char* rule_name) {
    out << "\\ " << rule_name << " axis model over " << profile.num_candidates()
        << " candidates\n";
    for (int c = 0; c < profile.num_candidates(); ++c)
        out << "\\ candidate " << c << " = " << profile.candidate_names()[c] << "\n";
}

void emit_order_constraints(std::ostringstream& out, int m) {
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            out << " antisym_" << a << "_" << b << ": " << var_x(a, b) << " + " << var_x(b, a)
                << " = 1\n";
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (b == a) continue;
            for (int c = 0; c < m; ++c) {
                if (c == a || c == b) continue;
                out << " trans_" << a << "_" << b << "_" << c << ": " << var_x(a, b) << " + "
                    << var_x(b, c) << " - " << var_x(a, c) << " <= 1\n";
            }
        }
}

void emit_binary_x(std::ostringstream& out, int m) {
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b) out << " " << var_x(a, b) << "\n";
}

std::string export_vd(const WeightedProfile& profile) {
    int m = profile.num_candidates();
    const auto& entries = profile.entries();
    std::ostringstream out;
    emit_header(out, profile, "voter-deletion");
    out << "Minimize\n obj:";
    Rational constant(0);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        constant += entries[k].weight;
        out << " - " << decimal_string(entries[k].weight) << " y_" << k;
    }
    out << " + " << decimal_string(constant) << "\n";
    out << "Subject To\n";
    emit_order_constraints(out, m);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        auto members = set_members(entries[k].ballot.members);
        for (int a : members)
            for (int c : members) {
                if (a == c) continue;
                for (int b = 0; b < m; ++b) {
                    if (entries[k].ballot.contains(b)) continue;
                    out << " intv_" << k << "_" << a << "_" << b << "_" << c << ": "
                        << var_x(a, b) << " + " << var_x(b, c) << " + y_" << k << " <= 2\n";
                }
            }
    }
    out << "Binary\n";
    emit_binary_x(out, m);
    for (std::size_t k = 0; k < entries.size(); ++k) out << " y_" << k << "\n";
    out << "End\n";
    return out.str();
}

std::string export_bc(const WeightedProfile& profile) {
    int m = profile.num_candidates();
    const auto& entries = profile.entries();
    std::ostringstream out;
    emit_header(out, profile, "ballot-completion");
    out << "Minimize\n obj:";
    Rational constant(0);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& w = entries[k].weight;
        out << " + " << decimal_string(w) << " hi_" << k << " - " << decimal_string(w) << " lo_"
            << k;
        constant += w * Rational(1 - entries[k].ballot.size());
    }
    if (constant < Rational(0))
        out << " - " << decimal_string(-constant) << "\n";
    else
        out << " + " << decimal_string(constant) << "\n";
    out << "Subject To\n";
    emit_order_constraints(out, m);
    // p_a = number of candidates placed before a
    for (int a = 0; a < m; ++a) {
        out << " pos_" << a << ": p_" << a;
        for (int b = 0; b < m; ++b)
            if (b != a) out << " - " << var_x(b, a);
        out << " = 0\n";
    }
    for (std::size_t k = 0; k < entries.size(); ++k) {
        for (int a : set_members(entries[k].ballot.members)) {
            out << " hi_" << k << "_" << a << ": hi_" << k << " - p_" << a << " >= 0\n";
            out << " lo_" << k << "_" << a << ": lo_" << k << " - p_" << a << " <= 0\n";
        }
    }
    out << "Bounds\n";
    for (int a = 0; a < m; ++a) out << " 0 <= p_" << a << " <= " << m - 1 << "\n";
    for (std::size_t k = 0; k < entries.size(); ++k) {
        out << " 0 <= hi_" << k << " <= " << m - 1 << "\n";
        out << " 0 <= lo_" << k << " <= " << m - 1 << "\n";
    }
    out << "Binary\n";
    emit_binary_x(out, m);
    out << "Generals\n";
    for (int a = 0; a < m; ++a) out << " p_" << a << "\n";
    for (std::size_t k = 0; k < entries.size(); ++k) out << " hi_" << k << "\n lo_" << k << "\n";
    out << "End\n";
    return out.str();
}

}  // namespace

std::string export_ilp(const WeightedProfile& profile, CostRule rule) {
    WeightedProfile prep = preprocess(profile);
    switch (rule) {
        case CostRule::VoterDeletion: return export_vd(prep);
        case CostRule::BallotCompletion: return export_bc(prep);
        default:
            throw RuleUnsupportedError("ILP export supports vd and bc, not " + to_string(rule));
    }
}

}  // namespace axisfit
