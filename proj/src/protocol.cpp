#include "ramsey/protocol.hpp"

#include <cmath>
#include <stdexcept>

namespace ramsey {

Schedule::Schedule(int max_stage, int base_detections, int increment)
    : max_stage_(max_stage),
      base_detections_(base_detections),
      increment_(increment) {
    if (max_stage < 0) throw std::invalid_argument("K must be >= 0");
    if (max_stage > 40) throw std::invalid_argument("K too large");
    if (base_detections < 1) throw std::invalid_argument("G must be >= 1");
    if (increment < 0) throw std::invalid_argument("F must be >= 0");
}

int Schedule::detections_at_stage(int stage) const {
    if (stage < 0 || stage > max_stage_)
        throw std::invalid_argument("stage outside 0..K");
    return base_detections_ + increment_ * (max_stage_ - stage);
}

int Schedule::total_detections() const {
    int total = 0;
    for (int k = 0; k <= max_stage_; ++k) total += detections_at_stage(k);
    return total;
}

std::int64_t Schedule::total_time() const {
    const std::int64_t pow2 = std::int64_t{1} << (max_stage_ + 1);
    return base_detections_ * (pow2 - 1) +
           increment_ * (pow2 - 2 - max_stage_);
}

std::string to_string(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::nonadaptive: return "nonadaptive";
        case PolicyKind::decision_tree: return "tree";
        case PolicyKind::adaptive_homodyne: return "homodyne";
        case PolicyKind::cappellaro: return "cappellaro";
        case PolicyKind::hybrid: return "hybrid";
    }
    throw std::logic_error("unknown policy kind");
}

PolicyKind policy_kind_from_string(const std::string& name) {
    if (name == "nonadaptive") return PolicyKind::nonadaptive;
    if (name == "tree") return PolicyKind::decision_tree;
    if (name == "homodyne") return PolicyKind::adaptive_homodyne;
    if (name == "cappellaro") return PolicyKind::cappellaro;
    if (name == "hybrid") return PolicyKind::hybrid;
    throw std::invalid_argument("unknown policy kind: " + name);
}

Policy::Policy(PolicyKind kind, const Schedule& schedule,
               std::vector<double> increments)
    : kind_(kind), schedule_(schedule), increments_(std::move(increments)) {}

Policy Policy::nonadaptive(const Schedule& schedule) {
    return Policy(PolicyKind::nonadaptive, schedule, {});
}

Policy Policy::adaptive_homodyne(const Schedule& schedule) {
    return Policy(PolicyKind::adaptive_homodyne, schedule, {});
}

Policy Policy::cappellaro(const Schedule& schedule) {
    return Policy(PolicyKind::cappellaro, schedule, {});
}

Policy Policy::decision_tree(const Schedule& schedule,
                             std::span<const double> increments) {
    return from_vector(PolicyKind::decision_tree, schedule, increments);
}

Policy Policy::hybrid(const Schedule& schedule,
                      std::span<const double> increments) {
    return from_vector(PolicyKind::hybrid, schedule, increments);
}

std::size_t Policy::parameter_count(const Schedule& schedule) {
    return 2 * static_cast<std::size_t>(schedule.total_detections());
}

Policy Policy::from_vector(PolicyKind kind, const Schedule& schedule,
                           std::span<const double> parameters) {
    if (kind != PolicyKind::decision_tree && kind != PolicyKind::hybrid)
        throw std::invalid_argument("policy kind carries no parameters");
    const std::size_t expected = parameter_count(schedule);
    if (parameters.size() != expected)
        throw std::invalid_argument("parameter vector has wrong length");
    std::vector<double> wrapped(parameters.size());
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        if (!std::isfinite(parameters[i]))
            throw std::invalid_argument("non-finite policy parameter");
        wrapped[i] = wrap_two_pi(parameters[i]);
    }
    return Policy(kind, schedule, std::move(wrapped));
}

double Policy::increment_after(int stage, int index, int outcome) const {
    // Flat offset of detection (stage, index) in visit order.
    std::size_t det = 0;
    for (int k = schedule_.max_stage(); k > stage; --k)
        det += static_cast<std::size_t>(schedule_.detections_at_stage(k));
    det += static_cast<std::size_t>(index);
    const std::size_t slot = 2 * det + (outcome == 1 ? 0 : 1);
    return increments_[slot];
}

PhaseController::PhaseController(const Policy& policy)
    : policy_(&policy),
      theta_(0.0),
      any_outcome_(false),
      prev_stage_(0),
      prev_index_(0),
      prev_outcome_(0) {}

double PhaseController::next_phase(int stage, int index,
                                   const FourierPosterior& posterior) {
    const Schedule& schedule = policy_->schedule();
    switch (policy_->kind()) {
        case PolicyKind::nonadaptive:
            // Equally spaced phases over a pi range within each stage.
            theta_ = wrap_two_pi(pi * index /
                                 schedule.detections_at_stage(stage));
            break;
        case PolicyKind::decision_tree:
            if (any_outcome_)
                theta_ = wrap_two_pi(
                    theta_ + policy_->increment_after(prev_stage_, prev_index_,
                                                      prev_outcome_));
            break;
        case PolicyKind::adaptive_homodyne:
            theta_ = wrap_two_pi(posterior.scaled_phase_estimate(stage) +
                                 0.5 * pi);
            break;
        case PolicyKind::cappellaro:
            if (stage == schedule.max_stage()) {
                theta_ = 0.0;
            } else if (index == 0) {
                theta_ = wrap_two_pi(
                    0.5 * posterior.scaled_phase_estimate(stage + 1));
            }
            break;
        case PolicyKind::hybrid:
            if (index == 0) {
                theta_ = stage == schedule.max_stage()
                             ? 0.0
                             : wrap_two_pi(0.5 * posterior.scaled_phase_estimate(
                                               stage + 1));
            } else {
                theta_ = wrap_two_pi(
                    theta_ + policy_->increment_after(stage, index - 1,
                                                      prev_outcome_));
            }
            break;
    }
    prev_stage_ = stage;
    prev_index_ = index;
    return theta_;
}

void PhaseController::record_outcome(int outcome) {
    prev_outcome_ = outcome;
    any_outcome_ = true;
}

TrialResult run_trial(const Schedule& schedule, const Policy& policy,
                      const MeasurementModel& model, double true_phase,
                      RngStream& rng, FourierPosterior& workspace,
                      std::vector<Detection>* record) {
    if (workspace.max_index() <
        static_cast<std::size_t>(schedule.total_time()))
        throw std::invalid_argument("posterior too small for schedule");
    workspace.reset();
    PhaseController controller(policy);
    for (int k = schedule.max_stage(); k >= 0; --k) {
        const double v = model.decayed_visibility(k);
        const int detections = schedule.detections_at_stage(k);
        for (int m = 0; m < detections; ++m) {
            const double theta = controller.next_phase(k, m, workspace);
            const int u =
                model.sample_outcome(true_phase, theta, k, rng.uniform01());
            workspace.update(u, theta, k, v);
            controller.record_outcome(u);
            if (record) record->push_back({u, k, theta});
        }
    }
    return {workspace.phase_estimate(), true_phase};
}

}  // namespace ramsey
