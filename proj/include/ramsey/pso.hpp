#ifndef RAMSEY_PSO_HPP_
#define RAMSEY_PSO_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ramsey/model.hpp"

namespace ramsey {

// Constriction-factor particle swarm. Defaults follow the standard
// Kennedy-Eberhart parameterization: chi = 0.729 with both attraction
// weights at 2.05, 10 particles, 300 iterations, and initial velocities
// bounded by half the coordinate extent per step.
struct SwarmConfig {
    double constriction = 0.729;   // chi
    double global_weight = 2.05;   // c_g
    double local_weight = 2.05;    // c_l
    int particles = 10;
    int max_iterations = 300;
    double max_velocity = pi;      // initial |v| bound per coordinate
    double lower_bound = 0.0;      // coordinate domain [lower, upper)
    double upper_bound = two_pi;
    double spread_tolerance = 1e-4;  // early stop on max pairwise distance
    bool per_particle_draws = false;  // one (r_g, r_l) pair per particle
                                      // instead of per coordinate

    void validate() const;
};

// chi * (v + c_g r_g (x_g - x) + c_l r_l (x_l - x)) for one coordinate.
double velocity_component(double velocity, double position,
                          double global_best, double local_best, double r_g,
                          double r_l, const SwarmConfig& config);

// Fold a coordinate back into [lower, upper), negating the velocity once
// per boundary crossing. Exact landings on the upper bound wrap to the
// lower one (the policy domain is periodic).
struct Reflected {
    double position;
    double velocity;
};
Reflected reflect(double position, double velocity, double lower,
                  double upper);

struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> best_position;
    double best_value;
};

struct TracePoint {
    int iteration;     // 0 is the initial evaluation
    double best_value;
    double mean_value;  // mean objective over the swarm this iteration
    double spread;      // max pairwise max-norm distance
};

struct OptimizeResult {
    std::vector<double> best_position;
    double best_value;        // under the training objective
    double validation_value;  // NaN when no validation objective given
    std::vector<TracePoint> trace;
    int iterations;           // iterations actually performed
};

using Objective = std::function<double(std::span<const double>)>;

// Deterministically initialize the swarm: positions uniform in the
// bounds, velocities uniform in [-max_velocity, max_velocity], bests
// seeded from one evaluation of the starting positions.
std::vector<Particle> swarm_init(const Objective& objective,
                                 const SwarmConfig& config,
                                 std::size_t dimension, std::uint64_t seed);

// Run the swarm until max_iterations or the spread tolerance. The
// training objective must be a pure function of the position (any
// sampling inside it must use a frozen seed); every candidate is scored
// against it, and the final best is additionally scored with the
// validation objective when one is supplied. NaN objective values are
// reported as errors together with the offending position; infinities
// are legal (they simply never become a best). on_iteration, when set,
// sees every trace point as it is produced.
using IterationCallback = std::function<void(const TracePoint&)>;
OptimizeResult optimize(const Objective& objective, const SwarmConfig& config,
                        std::size_t dimension, std::uint64_t seed,
                        const Objective* validation = nullptr,
                        const IterationCallback& on_iteration = {});

}  // namespace ramsey

#endif  // RAMSEY_PSO_HPP_
