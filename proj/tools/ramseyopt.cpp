#include <CLI11.hpp>
#include <iostream>

#include "ramsey/commands.hpp"

int main(int argc, char** argv) {
    ramsey::ExperimentConfig config;

    CLI::App app{
        "ramseyopt: simulate adaptive Ramsey-interferometry phase "
        "estimation, evaluate measurement policies (exact or Monte Carlo "
        "Holevo variance), and search for optimized decision-tree policies "
        "with a particle swarm."};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "Flat key=value file with the options below; command-line "
                   "flags override file values");

    app.add_option("--fd", config.fd, "Initial fringe visibility, (0,1]")
        ->capture_default_str();
    app.add_option("--t2", config.t2,
                   "Coherence time T2 in units of tau (inf allowed)")
        ->capture_default_str();
    app.add_option("--g", config.g, "Detections at the longest time (G)")
        ->capture_default_str();
    app.add_option("--f", config.f, "Detection increment per halving (F)")
        ->capture_default_str();
    app.add_option("--k", config.k_list,
                   "Largest stage exponent K; comma list sweeps several")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--protocol", config.protocols,
                   "nonadaptive | tree | homodyne | cappellaro | hybrid "
                   "(comma list for sweep)")
        ->delimiter(',');
    app.add_option("--policy-file", config.policy_file,
                   "Policy file for the tree/hybrid protocols");
    app.add_option("--method", config.method, "monte_carlo | exact")
        ->capture_default_str();
    app.add_option("--trials", config.trials, "Monte Carlo sample size")
        ->capture_default_str();
    app.add_option("--seed", config.seed, "Master seed")
        ->capture_default_str();
    app.add_option("--validation-seed", config.validation_seed,
                   "Seed for the final re-scoring of optimized policies")
        ->capture_default_str();
    app.add_option("--workers", config.workers,
                   "Worker threads (0 = RAMSEYOPT_WORKERS or OpenMP default)")
        ->envname("RAMSEYOPT_WORKERS")
        ->capture_default_str();
    app.add_option("--out", config.out,
                   "Output path (stdout when omitted; optimize requires it)");
    app.add_option("--pso-particles", config.pso_particles, "Swarm size")
        ->capture_default_str();
    app.add_option("--pso-iterations", config.pso_iterations,
                   "Swarm iteration cap")
        ->capture_default_str();
    app.add_option("--pso-chi", config.pso_chi, "Constriction factor")
        ->capture_default_str();
    app.add_option("--pso-cg", config.pso_cg, "Global attraction weight")
        ->capture_default_str();
    app.add_option("--pso-cl", config.pso_cl, "Local attraction weight")
        ->capture_default_str();
    app.add_option("--pso-vmax", config.pso_vmax,
                   "Initial velocity bound per coordinate")
        ->capture_default_str();
    app.add_option("--pso-training-trials", config.pso_training_trials,
                   "Monte Carlo sample size during the search")
        ->capture_default_str();
    app.add_option("--pso-tolerance", config.pso_tolerance,
                   "Early-stop swarm spread tolerance")
        ->capture_default_str();
    app.add_flag("--pso-per-particle-draws", config.pso_per_particle_draws,
                 "One random pair per particle instead of per coordinate");
    app.add_option("--n", config.n_list, "N values for the bounds table")
        ->delimiter(',');

    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "Holevo variance of a policy over the given schedules");
    CLI::App* optimize = app.add_subcommand(
        "optimize", "Swarm-search tree/hybrid phase increments");
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Plot-ready V_H*N curves over K for several protocols");
    CLI::App* bounds = app.add_subcommand(
        "bounds", "Analytic variance and dynamic-range limits");
    for (CLI::App* sub : {evaluate, optimize, sweep, bounds})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (evaluate->parsed()) ramsey::cmd_evaluate(config);
        if (optimize->parsed()) ramsey::cmd_optimize(config);
        if (sweep->parsed()) ramsey::cmd_sweep(config);
        if (bounds->parsed()) ramsey::cmd_bounds(config);
    } catch (const ramsey::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
