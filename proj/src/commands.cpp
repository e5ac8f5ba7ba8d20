#include "ramsey/commands.hpp"

#include <ctime>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "ramsey/eval.hpp"
#include "ramsey/io.hpp"
#include "ramsey/pso.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

KeyValues sidecar(const ExperimentConfig& config, const std::string& command) {
    KeyValues kv;
    kv.emplace_back("artifact", std::string("ramseyopt ") + kArtifactVersion);
    kv.emplace_back("command", command);
    kv.emplace_back("timestamp", utc_timestamp());
    kv.emplace_back("resolved_workers",
                    std::to_string(resolve_workers(config.workers)));
    const KeyValues echo = config.to_key_values();
    kv.insert(kv.end(), echo.begin(), echo.end());
    return kv;
}

// Main table goes to stdout when no output path is configured; with a
// path, the table lands there and the sidecar next to it.
void emit(const ExperimentConfig& config, const std::string& command,
          const std::string& table, KeyValues extra_metadata = {}) {
    if (config.out.empty()) {
        std::cout << table;
        return;
    }
    write_text_file(config.out, table);
    KeyValues kv = sidecar(config, command);
    kv.insert(kv.end(), extra_metadata.begin(), extra_metadata.end());
    write_metadata_file(config.out + ".meta", kv);
}

PolicyKind single_protocol(const ExperimentConfig& config) {
    if (config.protocols.size() != 1)
        throw ConfigError("this command takes exactly one protocol");
    return policy_kind_from_string(config.protocols.front());
}

Policy parameterless_policy(PolicyKind kind, const Schedule& schedule) {
    switch (kind) {
        case PolicyKind::nonadaptive: return Policy::nonadaptive(schedule);
        case PolicyKind::adaptive_homodyne:
            return Policy::adaptive_homodyne(schedule);
        case PolicyKind::cappellaro: return Policy::cappellaro(schedule);
        default:
            throw ConfigError(
                "decision-tree protocols need --policy-file (run optimize "
                "first)");
    }
}

}  // namespace

void cmd_evaluate(const ExperimentConfig& config) {
    config.validate();
    const PolicyKind kind = single_protocol(config);
    const MeasurementModel model(config.fd, config.t2);

    std::vector<std::pair<Schedule, Policy>> runs;
    if (kind == PolicyKind::decision_tree || kind == PolicyKind::hybrid) {
        if (config.policy_file.empty())
            throw ConfigError(
                "decision-tree protocols need --policy-file (run optimize "
                "first)");
        if (!std::filesystem::exists(config.policy_file))
            throw ConfigError("policy file not found: " + config.policy_file);
        Policy policy = read_policy_file(config.policy_file);
        if (policy.kind() != kind)
            throw ConfigError("policy file variant does not match --protocol");
        runs.emplace_back(policy.schedule(), policy);
    } else {
        if (!config.policy_file.empty())
            throw ConfigError("--policy-file only applies to tree/hybrid");
        for (const int k : config.k_list) {
            const Schedule schedule(k, config.g, config.f);
            runs.emplace_back(schedule, parameterless_policy(kind, schedule));
        }
    }

    std::ostringstream table;
    table << variance_csv_header() << '\n';
    for (const auto& [schedule, policy] : runs) {
        VarianceReport report;
        if (config.method == "exact") {
            ExactOptions options;
            options.workers = config.workers;
            report = exact_variance(schedule, policy, model, options);
        } else {
            const std::uint64_t row_seed = derive_seed(
                config.seed, static_cast<std::uint64_t>(schedule.max_stage()));
            report = monte_carlo_variance(schedule, policy, model,
                                          config.trials, row_seed,
                                          config.workers);
        }
        table << variance_csv_row(report) << '\n';
    }
    emit(config, "evaluate", table.str());
}

void cmd_sweep(const ExperimentConfig& config) {
    config.validate();
    const MeasurementModel model(config.fd, config.t2);
    std::vector<PolicyKind> kinds;
    for (const std::string& name : config.protocols) {
        const PolicyKind kind = policy_kind_from_string(name);
        if (kind == PolicyKind::decision_tree || kind == PolicyKind::hybrid)
            throw ConfigError(
                "sweep supports the parameterless protocols (nonadaptive, "
                "homodyne, cappellaro); optimize tree policies per schedule "
                "and use evaluate");
        kinds.push_back(kind);
    }

    std::vector<std::vector<VarianceReport>> curves;
    for (const PolicyKind kind : kinds)
        curves.push_back(curve_sweep(kind, model, config.g, config.f,
                                     config.k_list, config.trials, config.seed,
                                     config.workers));

    std::ostringstream table;
    table << "n";
    for (const std::string& name : config.protocols) table << ",vh_n_" << name;
    table << ",bound_n,equal_time\n";
    for (std::size_t row = 0; row < config.k_list.size(); ++row) {
        const std::int64_t n = curves.front()[row].total_time;
        table << n;
        for (const auto& curve : curves)
            table << ',' << format_double(curve[row].v_h_times_n());
        table << ',' << format_double(double(n) * holevo_lower_bound(n))
              << ',' << format_double(double(n) * equal_time_bound(n)) << '\n';
    }
    emit(config, "sweep", table.str());
}

void cmd_bounds(const ExperimentConfig& config) {
    config.validate();
    std::ostringstream table;
    table << "n,vh_bound,vh_equal_time,dr_equal_time,dr_bound\n";
    for (const std::int64_t n : config.n_list) {
        table << n << ',' << format_double(holevo_lower_bound(n)) << ','
              << format_double(equal_time_bound(n)) << ','
              << format_double(equal_time_dynamic_range(n)) << ','
              << format_double(1.0 / double(n)) << '\n';
    }
    emit(config, "bounds", table.str());
}

void cmd_optimize(const ExperimentConfig& config) {
    config.validate();
    const PolicyKind kind = single_protocol(config);
    if (kind != PolicyKind::decision_tree && kind != PolicyKind::hybrid)
        throw ConfigError("optimize requires --protocol tree or hybrid");
    if (config.k_list.size() != 1)
        throw ConfigError("optimize takes exactly one k");
    if (config.out.empty())
        throw ConfigError("optimize requires --out for the policy file");

    const MeasurementModel model(config.fd, config.t2);
    const Schedule schedule(config.k_list.front(), config.g, config.f);
    const std::size_t dimension = Policy::parameter_count(schedule);

    const auto score = [&](std::span<const double> position,
                           std::uint64_t trials,
                           std::uint64_t seed) -> VarianceReport {
        const Policy policy = Policy::from_vector(kind, schedule, position);
        return monte_carlo_variance(policy.schedule(), policy, model, trials,
                                    seed, config.workers);
    };
    const Objective training = [&](std::span<const double> position) {
        return score(position, config.pso_training_trials, config.seed).v_h;
    };
    const Objective validation = [&](std::span<const double> position) {
        return score(position, config.trials, config.validation_seed).v_h;
    };

    SwarmConfig swarm;
    swarm.constriction = config.pso_chi;
    swarm.global_weight = config.pso_cg;
    swarm.local_weight = config.pso_cl;
    swarm.particles = config.pso_particles;
    swarm.max_iterations = config.pso_iterations;
    swarm.max_velocity = config.pso_vmax;
    swarm.spread_tolerance = config.pso_tolerance;
    swarm.per_particle_draws = config.pso_per_particle_draws;

    const std::uint64_t swarm_seed = derive_seed(config.seed, 0x50534full);
    const IterationCallback progress = [&](const TracePoint& point) {
        if (point.iteration % 25 == 0)
            std::cerr << "optimize: iteration " << point.iteration << '/'
                      << swarm.max_iterations << "  best "
                      << format_double(point.best_value) << "  spread "
                      << format_double(point.spread) << '\n';
    };
    const OptimizeResult result = optimize(training, swarm, dimension,
                                           swarm_seed, &validation, progress);

    const Policy best = Policy::from_vector(kind, schedule,
                                            result.best_position);
    write_policy_file(config.out, best);

    std::ostringstream trace;
    trace << trace_csv_header() << '\n';
    for (const TracePoint& point : result.trace)
        trace << trace_csv_row(point) << '\n';
    write_text_file(config.out + ".trace.csv", trace.str());

    // Two standard variance rows: the frozen-seed training score and the
    // fresh-seed validation score.
    VarianceReport training_report =
        score(result.best_position, config.pso_training_trials, config.seed);
    VarianceReport validation_report =
        score(result.best_position, config.trials, config.validation_seed);
    std::ostringstream scores;
    scores << variance_csv_header() << '\n'
           << variance_csv_row(training_report) << '\n'
           << variance_csv_row(validation_report) << '\n';
    write_text_file(config.out + ".scores.csv", scores.str());

    KeyValues kv = sidecar(config, "optimize");
    kv.emplace_back("dimension", std::to_string(dimension));
    kv.emplace_back("iterations", std::to_string(result.iterations));
    kv.emplace_back("training_score", format_double(result.best_value));
    kv.emplace_back("validation_score",
                    format_double(result.validation_value));
    write_metadata_file(config.out + ".meta", kv);
}

}  // namespace ramsey
