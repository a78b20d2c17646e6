#pragma once

// Synthetic evaluation protocol: sample a ground-truth profile, solve it under
// each rule, and score the output by the mean reversal-minimized Kendall-tau
// distance from the returned axes to the truth (ties averaged). One CSV row
// per (model, params, rule, replicate).

#include <vector>

#include "axisfit/io.hpp"
#include "axisfit/synthetic.hpp"

namespace axisfit {

struct ExperimentRow {
    std::string model;
    std::string params;
    std::string rule;
    int replicate = 0;
    double distance = 0.0;
};

struct ExperimentSpec {
    NoiseModelConfig config;  // seed is mixed with the replicate index
    std::vector<RuleId> rules;
    int replicates = 0;
};

std::string params_string(const NoiseModelConfig& config);

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec,
                                          const SolveOptions& options = {});

/// Header "model,params,rule,replicate,distance" plus one line per row.
/// '.' decimal separator, LF line endings.
std::string to_csv(const std::vector<ExperimentRow>& rows);

}  // namespace axisfit
