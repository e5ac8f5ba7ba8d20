#include "ramsey/config.hpp"

#include <cmath>
#include <sstream>

#include "ramsey/protocol.hpp"

namespace ramsey {

namespace {

template <typename T>
std::string join(const std::vector<T>& values) {
    std::ostringstream oss;
    for (std::size_t i = 0; i < values.size(); ++i)
        oss << (i ? "," : "") << values[i];
    return oss.str();
}

}  // namespace

void ExperimentConfig::validate() const {
    if (!(fd > 0.0) || fd > 1.0) throw ConfigError("fd must be in (0, 1]");
    if (std::isnan(t2) || !(t2 > 0.0))
        throw ConfigError("t2 must be positive (inf allowed)");
    if (g < 1) throw ConfigError("g must be >= 1");
    if (f < 0) throw ConfigError("f must be >= 0");
    if (k_list.empty()) throw ConfigError("at least one k is required");
    for (const int k : k_list)
        if (k < 0 || k > 40) throw ConfigError("k must be in 0..40");
    if (protocols.empty()) throw ConfigError("a protocol is required");
    for (const std::string& p : protocols) {
        try {
            policy_kind_from_string(p);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if (method != "monte_carlo" && method != "exact")
        throw ConfigError("method must be monte_carlo or exact");
    if (trials < 2) throw ConfigError("trials must be >= 2");
    if (workers < 0) throw ConfigError("workers must be >= 0");
    if (pso_particles < 2) throw ConfigError("pso_particles must be >= 2");
    if (pso_iterations < 1) throw ConfigError("pso_iterations must be >= 1");
    if (!(pso_chi > 0.0) || pso_chi >= 1.0)
        throw ConfigError("pso_chi must be in (0, 1)");
    if (!(pso_cg > 0.0) || !(pso_cl > 0.0))
        throw ConfigError("pso weights must be positive");
    if (!(pso_vmax > 0.0)) throw ConfigError("pso_vmax must be positive");
    if (pso_training_trials < 2)
        throw ConfigError("pso_training_trials must be >= 2");
    for (const std::int64_t n : n_list)
        if (n < 1) throw ConfigError("n values must be >= 1");
}

KeyValues ExperimentConfig::to_key_values() const {
    KeyValues kv;
    kv.emplace_back("fd", format_double(fd));
    kv.emplace_back("t2", format_double(t2));
    kv.emplace_back("g", std::to_string(g));
    kv.emplace_back("f", std::to_string(f));
    kv.emplace_back("k", join(k_list));
    kv.emplace_back("protocol", join(protocols));
    kv.emplace_back("policy_file", policy_file);
    kv.emplace_back("method", method);
    kv.emplace_back("trials", std::to_string(trials));
    kv.emplace_back("seed", std::to_string(seed));
    kv.emplace_back("validation_seed", std::to_string(validation_seed));
    kv.emplace_back("workers", std::to_string(workers));
    kv.emplace_back("out", out);
    kv.emplace_back("pso_particles", std::to_string(pso_particles));
    kv.emplace_back("pso_iterations", std::to_string(pso_iterations));
    kv.emplace_back("pso_chi", format_double(pso_chi));
    kv.emplace_back("pso_cg", format_double(pso_cg));
    kv.emplace_back("pso_cl", format_double(pso_cl));
    kv.emplace_back("pso_vmax", format_double(pso_vmax));
    kv.emplace_back("pso_training_trials", std::to_string(pso_training_trials));
    kv.emplace_back("pso_tolerance", format_double(pso_tolerance));
    kv.emplace_back("pso_per_particle_draws",
                    pso_per_particle_draws ? "true" : "false");
    if (!n_list.empty()) kv.emplace_back("n", join(n_list));
    return kv;
}

}  // namespace ramsey
