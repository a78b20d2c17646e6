#include "axisfit/experiment.hpp"

#include <cstdio>

#include "axisfit/metrics.hpp"
#include "axisfit/rng.hpp"

namespace axisfit {

namespace {

std::string short_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

std::string params_string(const NoiseModelConfig& config) {
    switch (config.model) {
        case NoiseModel::Maverick:
        case NoiseModel::Flips:
        case NoiseModel::Omissions:
            return "p=" + short_double(config.p);
        case NoiseModel::Swaps:
            return "phi=" + short_double(config.phi);
        case NoiseModel::Noisy:
            return "sigma=" + short_double(config.sigma) + ";r=" + short_double(config.radius);
    }
    return "";
}

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec,
                                          const SolveOptions& options) {
    for (const RuleId& rule : spec.rules)
        if (rule.ranking && spec.config.model != NoiseModel::Noisy)
            throw ParameterDomainError("ranking rules need the noisy model's paired rankings");
    std::vector<ExperimentRow> rows;
    std::string model_name = to_string(spec.config.model);
    std::string params = params_string(spec.config);
    for (int replicate = 0; replicate < spec.replicates; ++replicate) {
        NoiseModelConfig config = spec.config;
        config.seed = Rng::mix(spec.config.seed, static_cast<std::uint64_t>(replicate));
        GroundTruthSample sample = generate(config);
        for (const RuleId& rule : spec.rules) {
            SolveResult result = rule.ranking
                                     ? solve_ranking(*sample.rankings, rule.rank, options)
                                     : solve(sample.profile, rule.cost, options);
            rows.push_back({model_name, params, rule.name(), replicate,
                            avg_distance_to_truth(result, sample.truth)});
        }
    }
    return rows;
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
    std::string out = "model,params,rule,replicate,distance\n";
    for (const ExperimentRow& row : rows) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", row.distance);
        out += row.model + "," + row.params + "," + row.rule + "," +
               std::to_string(row.replicate) + "," + buf + "\n";
    }
    return out;
}

}  // namespace axisfit
