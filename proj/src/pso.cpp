#include "ramsey/pso.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

double checked_evaluate(const Objective& objective,
                        std::span<const double> position) {
    const double value = objective(position);
    if (std::isnan(value)) {
        std::ostringstream oss;
        oss << "objective returned NaN at position [";
        for (std::size_t i = 0; i < position.size(); ++i)
            oss << (i ? ", " : "") << position[i];
        oss << "]";
        throw std::runtime_error(oss.str());
    }
    return value;
}

double max_norm_distance(std::span<const double> a,
                         std::span<const double> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

double swarm_spread(const std::vector<Particle>& swarm) {
    double spread = 0.0;
    for (std::size_t i = 0; i < swarm.size(); ++i)
        for (std::size_t j = i + 1; j < swarm.size(); ++j)
            spread = std::max(
                spread, max_norm_distance(swarm[i].position,
                                          swarm[j].position));
    return spread;
}

}  // namespace

void SwarmConfig::validate() const {
    if (!(constriction > 0.0) || constriction >= 1.0)
        throw std::invalid_argument("constriction must be in (0, 1)");
    if (!(global_weight > 0.0) || !(local_weight > 0.0))
        throw std::invalid_argument("attraction weights must be positive");
    if (particles < 2) throw std::invalid_argument("need >= 2 particles");
    if (max_iterations < 1)
        throw std::invalid_argument("need >= 1 iteration");
    if (!(max_velocity > 0.0))
        throw std::invalid_argument("max_velocity must be positive");
    if (!(upper_bound > lower_bound))
        throw std::invalid_argument("empty coordinate domain");
}

double velocity_component(double velocity, double position,
                          double global_best, double local_best, double r_g,
                          double r_l, const SwarmConfig& config) {
    return config.constriction *
           (velocity + config.global_weight * r_g * (global_best - position) +
            config.local_weight * r_l * (local_best - position));
}

Reflected reflect(double position, double velocity, double lower,
                  double upper) {
    const double range = upper - lower;
    double offset = position - lower;
    const double folds = std::floor(offset / range);
    offset -= folds * range;
    // Odd fold counts end on a descending segment of the triangle wave.
    if (std::fmod(std::abs(folds), 2.0) >= 1.0) {
        offset = range - offset;
        velocity = -velocity;
    }
    if (offset >= range) offset = 0.0;  // exact landing on the bound wraps
    if (offset < 0.0) offset = 0.0;
    return {lower + offset, velocity};
}

std::vector<Particle> swarm_init(const Objective& objective,
                                 const SwarmConfig& config,
                                 std::size_t dimension, std::uint64_t seed) {
    config.validate();
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    RngStream rng(seed, 0);
    std::vector<Particle> swarm(config.particles);
    for (Particle& p : swarm) {
        p.position.resize(dimension);
        p.velocity.resize(dimension);
        for (std::size_t d = 0; d < dimension; ++d)
            p.position[d] = rng.uniform(config.lower_bound, config.upper_bound);
        for (std::size_t d = 0; d < dimension; ++d)
            p.velocity[d] = rng.uniform(-config.max_velocity,
                                        config.max_velocity);
        p.best_position = p.position;
        p.best_value = checked_evaluate(objective, p.position);
    }
    return swarm;
}

OptimizeResult optimize(const Objective& objective, const SwarmConfig& config,
                        std::size_t dimension, std::uint64_t seed,
                        const Objective* validation,
                        const IterationCallback& on_iteration) {
    std::vector<Particle> swarm =
        swarm_init(objective, config, dimension, seed);
    RngStream rng(seed, 1);  // stream 0 seeded the swarm

    // Global best over the initial evaluations, scanned in particle order.
    std::size_t best = 0;
    for (std::size_t i = 1; i < swarm.size(); ++i)
        if (swarm[i].best_value < swarm[best].best_value) best = i;
    std::vector<double> best_position = swarm[best].best_position;
    double best_value = swarm[best].best_value;

    OptimizeResult result;
    {
        double mean = 0.0;
        for (const Particle& p : swarm) mean += p.best_value;
        result.trace.push_back(
            {0, best_value, mean / swarm.size(), swarm_spread(swarm)});
        if (on_iteration) on_iteration(result.trace.back());
    }

    int iteration = 0;
    while (iteration < config.max_iterations) {
        ++iteration;
        for (Particle& p : swarm) {
            double r_g = rng.uniform01();
            double r_l = rng.uniform01();
            for (std::size_t d = 0; d < dimension; ++d) {
                if (!config.per_particle_draws && d > 0) {
                    r_g = rng.uniform01();
                    r_l = rng.uniform01();
                }
                p.velocity[d] = velocity_component(
                    p.velocity[d], p.position[d], best_position[d],
                    p.best_position[d], r_g, r_l, config);
                const Reflected folded =
                    reflect(p.position[d] + p.velocity[d], p.velocity[d],
                            config.lower_bound, config.upper_bound);
                p.position[d] = folded.position;
                p.velocity[d] = folded.velocity;
            }
        }
        double mean = 0.0;
        for (Particle& p : swarm) {
            const double value = checked_evaluate(objective, p.position);
            mean += value;
            if (value < p.best_value) {
                p.best_value = value;
                p.best_position = p.position;
            }
        }
        for (const Particle& p : swarm)  // particle order for determinism
            if (p.best_value < best_value) {
                best_value = p.best_value;
                best_position = p.best_position;
            }
        const double spread = swarm_spread(swarm);
        result.trace.push_back(
            {iteration, best_value, mean / swarm.size(), spread});
        if (on_iteration) on_iteration(result.trace.back());
        if (spread < config.spread_tolerance) break;
    }

    result.best_position = std::move(best_position);
    result.best_value = best_value;
    result.iterations = iteration;
    result.validation_value =
        validation ? checked_evaluate(*validation, result.best_position)
                   : std::numeric_limits<double>::quiet_NaN();
    return result;
}

}  // namespace ramsey
