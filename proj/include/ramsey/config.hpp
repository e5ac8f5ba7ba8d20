#ifndef RAMSEY_CONFIG_HPP_
#define RAMSEY_CONFIG_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/io.hpp"
#include "ramsey/model.hpp"

namespace ramsey {

// Invalid configuration: reported with a distinct exit status by the CLI.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr const char* kArtifactVersion = "0.1.0";

// Everything a run needs; flag names and config-file keys mirror the
// field names.
struct ExperimentConfig {
    // model
    double fd = 0.85;
    double t2 = 1000.0;  // T2 in units of tau; inf allowed

    // schedule
    int g = 6;
    int f = 2;
    std::vector<int> k_list = {4};

    // policy
    std::vector<std::string> protocols = {"cappellaro"};
    std::string policy_file;

    // evaluation
    std::string method = "monte_carlo";  // or "exact"
    std::uint64_t trials = 1u << 16;
    std::uint64_t seed = 1;
    std::uint64_t validation_seed = 2;
    int workers = 0;  // 0 = RAMSEYOPT_WORKERS env or OpenMP default

    // output
    std::string out;

    // swarm search
    int pso_particles = 10;
    int pso_iterations = 300;
    double pso_chi = 0.729;
    double pso_cg = 2.05;
    double pso_cl = 2.05;
    double pso_vmax = pi;
    std::uint64_t pso_training_trials = 1u << 14;
    double pso_tolerance = 1e-4;
    bool pso_per_particle_draws = false;

    // bounds command
    std::vector<std::int64_t> n_list;

    void validate() const;

    // Full echo for the metadata sidecar.
    KeyValues to_key_values() const;
};

}  // namespace ramsey

#endif  // RAMSEY_CONFIG_HPP_
