#include "axisfit/metrics.hpp"

namespace axisfit {

long kendall_tau(const Axis& a, const Axis& b) {
    if (a.size() != b.size()) throw CandidateMismatchError("axes have different candidate counts");
    auto pos_b = b.positions();
    int m = a.size();
    long discordant = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (pos_b[a.at(i)] > pos_b[a.at(j)]) ++discordant;
    return discordant;
}

long axis_distance(const Axis& a, const Axis& b) {
    long forward = kendall_tau(a, b);
    long total = static_cast<long>(a.size()) * (a.size() - 1) / 2;
    return std::min(forward, total - forward);
}

double avg_distance_to_truth(const SolveResult& result, const Axis& truth) {
    if (result.optimal_axes.empty()) throw std::invalid_argument("empty optimal axis set");
    double sum = 0;
    for (const Axis& axis : result.optimal_axes)
        sum += static_cast<double>(axis_distance(axis, truth));
    return sum / static_cast<double>(result.optimal_axes.size());
}

std::vector<int> median_candidates(const Axis& axis) {
    int m = axis.size();
    if (m % 2 == 1) return {axis.at(m / 2)};
    return {axis.at(m / 2 - 1), axis.at(m / 2)};
}

}  // namespace axisfit
