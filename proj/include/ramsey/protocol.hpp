#ifndef RAMSEY_PROTOCOL_HPP_
#define RAMSEY_PROTOCOL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ramsey/model.hpp"
#include "ramsey/posterior.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

// Exponentially decreasing interaction-time plan: stages run k = K down
// to 0, with M_k = G + F*(K - k) detections at interaction time 2^k tau.
class Schedule {
public:
    Schedule(int max_stage, int base_detections, int increment);

    int max_stage() const { return max_stage_; }        // K
    int base_detections() const { return base_detections_; }  // G
    int increment() const { return increment_; }        // F

    // M_k; throws if k is outside 0..K.
    int detections_at_stage(int stage) const;

    // Sum of M_k over all stages.
    int total_detections() const;

    // N = G(2^{K+1}-1) + F(2^{K+1}-2-K), the total interaction time in
    // units of tau (equal to sum_k M_k 2^k).
    std::int64_t total_time() const;

private:
    int max_stage_;
    int base_detections_;
    int increment_;
};

enum class PolicyKind {
    nonadaptive,        // predetermined theta(k, m), outcome-independent
    decision_tree,      // cumulative increments keyed by previous detection
    adaptive_homodyne,  // theta = arg(b_{-2^k}) + pi/2 before every detection
    cappellaro,         // theta = arg(b_{-2^{k+1}})/2 at each stage change
    hybrid,             // cappellaro at stage boundaries, tree steps within
};

std::string to_string(PolicyKind kind);
PolicyKind policy_kind_from_string(const std::string& name);

// A control-phase strategy bound to its schedule. The decision-tree
// variants carry one phase increment per (stage, detection, outcome):
// the flat layout is stage-major in visit order (K first), detections in
// order within a stage, outcome +1 before -1, for 2 * sum_k M_k entries.
class Policy {
public:
    static Policy nonadaptive(const Schedule& schedule);
    static Policy adaptive_homodyne(const Schedule& schedule);
    static Policy cappellaro(const Schedule& schedule);
    static Policy decision_tree(const Schedule& schedule,
                                std::span<const double> increments);
    static Policy hybrid(const Schedule& schedule,
                         std::span<const double> increments);

    // Dimension of the decision-tree parameter space: 2 * sum_k M_k.
    static std::size_t parameter_count(const Schedule& schedule);

    // Build a parameterized policy from a flat vector (wrapped into
    // [0, 2*pi)); throws on length mismatch, non-finite entries, or a
    // parameterless kind.
    static Policy from_vector(PolicyKind kind, const Schedule& schedule,
                              std::span<const double> parameters);

    // Flat parameter vector; empty for parameterless kinds.
    std::vector<double> to_vector() const { return increments_; }

    PolicyKind kind() const { return kind_; }
    const Schedule& schedule() const { return schedule_; }
    bool has_parameters() const { return !increments_.empty(); }

    // Increment applied after a detection at (stage, index) with the given
    // outcome.
    double increment_after(int stage, int index, int outcome) const;

private:
    Policy(PolicyKind kind, const Schedule& schedule,
           std::vector<double> increments);

    PolicyKind kind_;
    Schedule schedule_;
    std::vector<double> increments_;
};

// Per-trial mutable policy state: tracks the running control phase and
// the previous detection so the next phase can be computed from the
// policy rule and (for the adaptive variants) the current posterior.
class PhaseController {
public:
    explicit PhaseController(const Policy& policy);

    // Control phase for the upcoming detection at (stage, index).
    double next_phase(int stage, int index, const FourierPosterior& posterior);

    // Record the detection's outcome (consumed by the tree variants).
    void record_outcome(int outcome);

private:
    const Policy* policy_;
    double theta_;
    bool any_outcome_;
    int prev_stage_;
    int prev_index_;
    int prev_outcome_;
};

struct TrialResult {
    double estimate;  // final phase estimate, (-pi, pi]
    double true_phase;
};

// Run one full measurement: stages K..0 with M_k detections each,
// sampling outcomes from the model and updating the posterior. The
// workspace posterior is reset on entry and must have
// max_index >= schedule.total_time(). If record is non-null the per
// detection (u, k, theta) triples are appended to it.
TrialResult run_trial(const Schedule& schedule, const Policy& policy,
                      const MeasurementModel& model, double true_phase,
                      RngStream& rng, FourierPosterior& workspace,
                      std::vector<Detection>* record = nullptr);

}  // namespace ramsey

#endif  // RAMSEY_PROTOCOL_HPP_
