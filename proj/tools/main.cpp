// axisfit command line: exact optimal axes for weighted approval (or ranking)
// profiles, per-axis cost breakdowns, linearity checks, synthetic profile
// generation, experiment sweeps, and axiom verdicts.

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "axisfit/axioms.hpp"
#include "axisfit/experiment.hpp"
#include "axisfit/io.hpp"
#include "axisfit/linearity.hpp"
#include "axisfit/metrics.hpp"
#include "axisfit/solver.hpp"
#include "axisfit/synthetic.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitSizeLimit = 3;
constexpr int kExitUnknownRule = 4;
constexpr int kExitUnknownCandidate = 5;
constexpr int kExitParameterDomain = 6;

struct CliError : std::runtime_error {
    CliError(int exit_code, const std::string& message)
        : std::runtime_error(message), code(exit_code) {}
    int code;
};

axisfit::ParsedProfile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError(kExitParse, "cannot open input file: " + path);
    return axisfit::parse_profile(in);
}

axisfit::WeightedProfile load_approval_profile(const std::string& path) {
    axisfit::ParsedProfile parsed = load_profile(path);
    if (auto* profile = std::get_if<axisfit::WeightedProfile>(&parsed)) return std::move(*profile);
    throw CliError(kExitParse, path + " holds ranking ballots, approval ballots expected");
}

axisfit::RankingProfile load_ranking_profile(const std::string& path) {
    axisfit::ParsedProfile parsed = load_profile(path);
    if (auto* profile = std::get_if<axisfit::RankingProfile>(&parsed)) return std::move(*profile);
    throw CliError(kExitParse, path + " holds approval ballots, ranking ballots expected");
}

axisfit::Axis parse_axis_names(const std::string& spec, const std::vector<std::string>& names) {
    std::vector<int> order;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        std::size_t b = token.find_first_not_of(" \t");
        std::size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw CliError(kExitUnknownCandidate, "empty axis entry");
        token = token.substr(b, e - b + 1);
        auto it = std::find(names.begin(), names.end(), token);
        if (it == names.end())
            throw CliError(kExitUnknownCandidate, "unknown candidate name: " + token);
        order.push_back(static_cast<int>(it - names.begin()));
    }
    if (order.size() != names.size())
        throw CliError(kExitUnknownCandidate, "axis must list every candidate exactly once");
    return axisfit::Axis(order);
}

axisfit::AxiomId parse_axiom_name(const std::string& name) {
    for (axisfit::AxiomId axiom : axisfit::kAllAxioms)
        if (axisfit::to_string(axiom) == name) return axiom;
    throw CliError(kExitUnknownRule, "unknown axiom: " + name);
}

nlohmann::ordered_json axes_json(const std::vector<axisfit::Axis>& axes,
                                 const std::vector<std::string>& names) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& axis : axes) {
        nlohmann::ordered_json one = nlohmann::ordered_json::array();
        for (int p = 0; p < axis.size(); ++p) one.push_back(names[axis.at(p)]);
        out.push_back(std::move(one));
    }
    return out;
}

int run_solve(const std::string& rule_name, const std::string& input, bool all_optimal,
              int threads, bool no_prune, bool decompose, bool per_axis,
              const std::string& ilp_path, int bound, bool warm_start) {
    axisfit::RuleId rule = axisfit::RuleId::parse(rule_name);
    axisfit::SolveOptions options;
    options.enumeration_bound = bound;
    options.thread_count = threads;
    options.use_pair_pruning = !no_prune;
    options.use_decomposition = decompose;

    auto start = std::chrono::steady_clock::now();
    axisfit::SolveResult result;
    std::vector<std::string> names;
    axisfit::ResultDocumentOptions doc_options;
    doc_options.all_optimal = all_optimal;

    if (rule.ranking) {
        axisfit::RankingProfile profile = load_ranking_profile(input);
        names = profile.candidate_names();
        result = axisfit::solve_ranking(profile, rule.rank, options);
    } else {
        axisfit::WeightedProfile profile = load_approval_profile(input);
        names = profile.candidate_names();
        if (warm_start) options.warm_start = axisfit::greedy_warm_start(profile, rule.cost);
        result = axisfit::solve(profile, rule.cost, options);
        if (!ilp_path.empty()) {
            std::string model = axisfit::export_ilp(profile, rule.cost);
            std::ofstream out(ilp_path);
            if (!out) throw CliError(kExitParse, "cannot write " + ilp_path);
            out << model;
        }
        if (per_axis) {
            std::vector<int> perm(profile.num_candidates());
            std::iota(perm.begin(), perm.end(), 0);
            do {
                if (perm.size() >= 2 && perm.front() > perm.back()) continue;
                axisfit::Axis axis(perm);
                doc_options.per_axis_costs.push_back(
                    {axis, axisfit::profile_cost(rule.cost, profile, axis)});
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    std::cout << axisfit::result_document(rule.name(), result, names, ms, doc_options);
    return 0;
}

int run_cost(const std::string& rule_name, const std::string& input, const std::string& axis_spec) {
    axisfit::RuleId rule = axisfit::RuleId::parse(rule_name);
    axisfit::Rational total(0);
    std::cout << "rule " << rule.name() << " on axis " << axis_spec << "\n";
    if (rule.ranking) {
        axisfit::RankingProfile profile = load_ranking_profile(input);
        axisfit::Axis axis = parse_axis_names(axis_spec, profile.candidate_names());
        for (const auto& entry : profile.entries()) {
            long cost = axisfit::ranking_cost(rule.rank, entry.ballot, axis);
            total += entry.weight * axisfit::Rational(cost);
            std::cout << "  " << entry.weight.to_string() << " x ";
            for (std::size_t r = 0; r < entry.ballot.order.size(); ++r) {
                if (r > 0) std::cout << ">";
                std::cout << profile.candidate_names()[entry.ballot.order[r]];
            }
            std::cout << " : " << cost << "\n";
        }
    } else {
        axisfit::WeightedProfile profile = load_approval_profile(input);
        axisfit::Axis axis = parse_axis_names(axis_spec, profile.candidate_names());
        for (const auto& entry : profile.entries()) {
            long cost = axisfit::ballot_cost(rule.cost, entry.ballot, axis);
            total += entry.weight * axisfit::Rational(cost);
            std::cout << "  " << entry.weight.to_string() << " x {";
            bool first = true;
            for (int c : axisfit::set_members(entry.ballot.members)) {
                if (!first) std::cout << ",";
                std::cout << profile.candidate_names()[c];
                first = false;
            }
            std::cout << "} : " << cost << "\n";
        }
    }
    std::cout << "total " << total.to_string() << "\n";
    return 0;
}

axisfit::NoiseModelConfig build_config(const std::string& model, double p, double phi, double sigma,
                                       double r, int m, int n, std::uint64_t seed) {
    axisfit::NoiseModelConfig config;
    if (model == "maverick")
        config.model = axisfit::NoiseModel::Maverick;
    else if (model == "flips")
        config.model = axisfit::NoiseModel::Flips;
    else if (model == "omissions")
        config.model = axisfit::NoiseModel::Omissions;
    else if (model == "swaps")
        config.model = axisfit::NoiseModel::Swaps;
    else if (model == "noisy")
        config.model = axisfit::NoiseModel::Noisy;
    else
        throw CliError(kExitParameterDomain, "unknown model: " + model);
    config.p = p;
    config.phi = phi;
    config.sigma = sigma;
    config.radius = r;
    config.m = m;
    config.n = n;
    config.seed = seed;
    return config;
}

int run_gen(const axisfit::NoiseModelConfig& config, const std::string& out_path, bool rankings) {
    axisfit::GroundTruthSample sample = axisfit::generate(config);
    std::string profile_text;
    std::vector<std::string> names;
    if (rankings) {
        if (!sample.rankings)
            throw CliError(kExitParameterDomain, "only the noisy model pairs rankings");
        profile_text = axisfit::write_profile(*sample.rankings);
        names = sample.rankings->candidate_names();
    } else {
        profile_text = axisfit::write_profile(sample.profile);
        names = sample.profile.candidate_names();
    }
    std::ofstream out(out_path);
    if (!out) throw CliError(kExitParse, "cannot write " + out_path);
    out << profile_text;
    std::ofstream truth(out_path + ".truth");
    if (!truth) throw CliError(kExitParse, "cannot write " + out_path + ".truth");
    truth << sample.truth.to_string(names) << "\n";
    for (std::size_t c = 0; c < sample.candidate_positions.size(); ++c)
        truth << "# position " << names[c] << " " << sample.candidate_positions[c] << "\n";
    return 0;
}

int run_experiment(const std::string& models_spec, const std::string& rules_spec, int m, int n,
                   int replicates, std::uint64_t seed, const std::string& out_path, int threads) {
    std::vector<axisfit::RuleId> rules;
    std::istringstream rin(rules_spec);
    std::string token;
    while (std::getline(rin, token, ',')) rules.push_back(axisfit::RuleId::parse(token));
    if (rules.empty()) throw CliError(kExitUnknownRule, "no rules given");

    std::vector<axisfit::ExperimentRow> rows;
    std::istringstream min(models_spec);
    std::string model_spec;
    axisfit::SolveOptions options;
    options.thread_count = threads;
    while (std::getline(min, model_spec, ';')) {
        std::string name = model_spec;
        double p = 0, phi = 0, sigma = 0, r = 0;
        std::size_t colon = model_spec.find(':');
        if (colon != std::string::npos) {
            name = model_spec.substr(0, colon);
            std::istringstream pin(model_spec.substr(colon + 1));
            std::string kv;
            while (std::getline(pin, kv, ',')) {
                std::size_t eq = kv.find('=');
                if (eq == std::string::npos)
                    throw CliError(kExitParameterDomain, "malformed model parameter: " + kv);
                std::string key = kv.substr(0, eq);
                double value = std::stod(kv.substr(eq + 1));
                if (key == "p")
                    p = value;
                else if (key == "phi")
                    phi = value;
                else if (key == "sigma")
                    sigma = value;
                else if (key == "r")
                    r = value;
                else
                    throw CliError(kExitParameterDomain, "unknown model parameter: " + key);
            }
        }
        axisfit::ExperimentSpec spec;
        spec.config = build_config(name, p, phi, sigma, r, m, n, seed);
        spec.rules = rules;
        spec.replicates = replicates;
        auto model_rows = axisfit::run_experiment(spec, options);
        rows.insert(rows.end(), model_rows.begin(), model_rows.end());
    }
    std::string csv = axisfit::to_csv(rows);
    if (out_path.empty() || out_path == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) throw CliError(kExitParse, "cannot write " + out_path);
        out << csv;
    }
    return 0;
}

nlohmann::ordered_json verdict_json(const std::string& instance_name, axisfit::AxiomId axiom,
                                    const axisfit::RuleId& rule,
                                    const axisfit::AxiomVerdict& verdict,
                                    const std::vector<std::string>& names) {
    nlohmann::ordered_json entry;
    entry["axiom"] = axisfit::to_string(axiom);
    entry["rule"] = rule.name();
    entry["instance"] = instance_name;
    entry["holds"] = verdict.holds;
    if (verdict.witness) {
        nlohmann::ordered_json witness;
        witness["detail"] = verdict.witness->detail;
        witness["axes"] = axes_json(verdict.witness->axes, names);
        if (verdict.witness->candidate) witness["candidate"] = names[*verdict.witness->candidate];
        entry["witness"] = std::move(witness);
    }
    return entry;
}

int run_axioms(const std::string& axiom_name, const std::string& rule_name, bool fixtures,
               int random_trials, std::uint64_t seed) {
    axisfit::AxiomId axiom = parse_axiom_name(axiom_name);
    axisfit::RuleId rule = axisfit::RuleId::parse(rule_name);
    if (rule.ranking) throw CliError(kExitUnknownRule, "axiom checks run on approval rules");
    nlohmann::ordered_json report = nlohmann::ordered_json::array();
    if (fixtures) {
        for (const auto& fixture : axisfit::fixture_instances(axiom)) {
            axisfit::AxiomVerdict verdict =
                axisfit::check_instance(axiom, rule.cost, fixture.instance);
            report.push_back(verdict_json(fixture.name, axiom, rule, verdict,
                                          fixture.instance.profile.candidate_names()));
        }
    } else {
        if (random_trials <= 0)
            throw CliError(kExitParameterDomain, "give --fixtures or --random N");
        auto found = axisfit::search_counterexample(axiom, rule.cost, random_trials, seed);
        if (found) {
            axisfit::AxiomVerdict verdict =
                axisfit::check_instance(axiom, rule.cost, found->instance);
            report.push_back(verdict_json("random-search", axiom, rule, verdict,
                                          found->instance.profile.candidate_names()));
        } else {
            nlohmann::ordered_json entry;
            entry["axiom"] = axisfit::to_string(axiom);
            entry["rule"] = rule.name();
            entry["instance"] = "random-search";
            entry["holds"] = true;
            entry["trials"] = random_trials;
            report.push_back(std::move(entry));
        }
    }
    std::cout << report.dump(2) << "\n";
    return 0;
}

int run_check_linear(const std::string& input, int bound) {
    axisfit::WeightedProfile profile = load_approval_profile(input);
    std::vector<axisfit::Axis> axes = axisfit::consistent_axes(profile, bound);
    nlohmann::ordered_json doc;
    doc["linear"] = !axes.empty();
    doc["consistent_axes"] = axes_json(axes, profile.candidate_names());
    std::cout << doc.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact optimal axes for approval and ranking profiles"};
    app.require_subcommand(1);

    std::string rule_name, input, ilp_path, axis_spec;
    bool all_optimal = false, no_prune = false, per_axis = false, warm = false;
    bool decompose = true;
    int threads = 1, bound = axisfit::kDefaultEnumerationBound;
    auto* solve_cmd = app.add_subcommand("solve", "find all optimal axes");
    solve_cmd->add_option("--rule", rule_name)->required();
    solve_cmd->add_option("--input", input)->required();
    solve_cmd->add_flag("--all-optimal", all_optimal, "list the complete tie set");
    solve_cmd->add_option("--threads", threads);
    solve_cmd->add_flag("--no-prune", no_prune, "disable pair-removal pruning");
    solve_cmd->add_flag("--decompose,!--no-decompose", decompose,
                        "solve co-approval classes independently where sound");
    solve_cmd->add_flag("--per-axis-costs", per_axis, "include every canonical axis cost");
    solve_cmd->add_flag("--warm-start", warm, "seed the incumbent with the insertion heuristic");
    solve_cmd->add_option("--export-ilp", ilp_path, "write an LP-format model");
    solve_cmd->add_option("--bound", bound, "enumeration bound on the candidate count");

    auto* cost_cmd = app.add_subcommand("cost", "cost of a given axis, with per-ballot breakdown");
    cost_cmd->add_option("--rule", rule_name)->required();
    cost_cmd->add_option("--input", input)->required();
    cost_cmd->add_option("--axis", axis_spec)->required();

    std::string model_name, out_path;
    double p = 0, phi = 0, sigma = 0, radius = 0;
    int m = 7, n = 100, replicates = 100;
    std::uint64_t seed = 1;
    bool rankings = false;
    auto* gen_cmd = app.add_subcommand("gen", "sample a synthetic profile with ground truth");
    gen_cmd->add_option("--model", model_name)->required();
    gen_cmd->add_option("--p", p);
    gen_cmd->add_option("--phi", phi);
    gen_cmd->add_option("--sigma", sigma);
    gen_cmd->add_option("--r", radius);
    gen_cmd->add_option("--m", m);
    gen_cmd->add_option("--n", n);
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--out", out_path)->required();
    gen_cmd->add_flag("--rankings", rankings, "emit the paired ranking profile (noisy only)");

    std::string models_spec, rules_spec;
    auto* exp_cmd = app.add_subcommand("experiment", "distance-to-truth sweeps, CSV output");
    exp_cmd->add_option("--models", models_spec)->required();
    exp_cmd->add_option("--rules", rules_spec)->required();
    exp_cmd->add_option("--m", m);
    exp_cmd->add_option("--n", n);
    exp_cmd->add_option("--replicates", replicates);
    exp_cmd->add_option("--seed", seed);
    exp_cmd->add_option("--out", out_path);
    exp_cmd->add_option("--threads", threads);

    std::string axiom_name;
    int random_trials = 0;
    bool fixtures = false;
    auto* ax_cmd = app.add_subcommand("axioms", "axiom verdicts with witnesses, JSON output");
    ax_cmd->add_option("--axiom", axiom_name)->required();
    ax_cmd->add_option("--rule", rule_name)->required();
    ax_cmd->add_flag("--fixtures", fixtures, "run the built-in separating instances");
    ax_cmd->add_option("--random", random_trials, "random falsification trials");
    ax_cmd->add_option("--seed", seed);

    auto* lin_cmd = app.add_subcommand("check-linear", "consecutive-ones check with all axes");
    lin_cmd->add_option("--input", input)->required();
    lin_cmd->add_option("--bound", bound);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed())
            return run_solve(rule_name, input, all_optimal, threads, no_prune, decompose, per_axis,
                             ilp_path, bound, warm);
        if (cost_cmd->parsed()) return run_cost(rule_name, input, axis_spec);
        if (gen_cmd->parsed())
            return run_gen(build_config(model_name, p, phi, sigma, radius, m, n, seed), out_path,
                           rankings);
        if (exp_cmd->parsed())
            return run_experiment(models_spec, rules_spec, m, n, replicates, seed, out_path,
                                  threads);
        if (ax_cmd->parsed()) return run_axioms(axiom_name, rule_name, fixtures, random_trials, seed);
        if (lin_cmd->parsed()) return run_check_linear(input, bound);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const axisfit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const axisfit::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const axisfit::RuleUnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownRule;
    } catch (const axisfit::CandidateMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownCandidate;
    } catch (const axisfit::ParameterDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParameterDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
