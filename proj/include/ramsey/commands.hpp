#ifndef RAMSEY_COMMANDS_HPP_
#define RAMSEY_COMMANDS_HPP_

#include <string>

#include "ramsey/config.hpp"

namespace ramsey {

// Subcommand entry points. Each validates the config, writes the main
// delimited table to config.out (or stdout when out is empty), and, when
// writing to a file, a "<out>.meta" sidecar echoing the full config,
// seeds, worker count, version, and timestamp.
void cmd_evaluate(const ExperimentConfig& config);
void cmd_sweep(const ExperimentConfig& config);
void cmd_bounds(const ExperimentConfig& config);

// Trains a decision-tree or hybrid policy with the swarm. Writes the
// policy to config.out, the convergence trace to "<out>.trace.csv", the
// training- and validation-seed scores to "<out>.scores.csv", and the
// sidecar to "<out>.meta".
void cmd_optimize(const ExperimentConfig& config);

}  // namespace ramsey

#endif  // RAMSEY_COMMANDS_HPP_
