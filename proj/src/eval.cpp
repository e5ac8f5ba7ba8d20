#include "ramsey/eval.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

constexpr std::uint64_t kBlockSize = 512;  // trials per reduction block
constexpr int kSplitDepth = 8;             // prefix depth for subtree work

struct StagePlan {
    int stage;
    int index;
    double visibility;
};

std::vector<StagePlan> build_plan(const Schedule& schedule,
                                  const MeasurementModel& model) {
    std::vector<StagePlan> plan;
    plan.reserve(schedule.total_detections());
    for (int k = schedule.max_stage(); k >= 0; --k) {
        const double v = model.decayed_visibility(k);
        for (int m = 0; m < schedule.detections_at_stage(k); ++m)
            plan.push_back({k, m, v});
    }
    return plan;
}

struct EnumNode {
    FourierPosterior posterior;
    PhaseController controller;
};

struct EnumAccum {
    CompensatedSum sharpness;
    CompensatedSum probability;
    CompensatedSum pruned;
    std::uint64_t leaves = 0;
};

// Depth-first walk below a node; contributions are accumulated in branch
// order (+1 before -1), which fixes the summation order.
void enumerate_from(const std::vector<StagePlan>& plan, std::size_t depth,
                    const EnumNode& node, double prune_threshold,
                    EnumAccum& accum) {
    if (depth == plan.size()) {
        accum.probability.add(node.posterior.normalization());
        accum.sharpness.add(node.posterior.normalization() *
                            node.posterior.sharpness());
        ++accum.leaves;
        return;
    }
    const StagePlan& step = plan[depth];
    PhaseController controller = node.controller;  // next_phase mutates
    const double theta =
        controller.next_phase(step.stage, step.index, node.posterior);
    for (const int u : {+1, -1}) {
        EnumNode child{node.posterior, controller};
        child.posterior.update(u, theta, step.stage, step.visibility);
        child.controller.record_outcome(u);
        if (child.posterior.normalization() < prune_threshold) {
            accum.pruned.add(child.posterior.normalization());
            continue;
        }
        enumerate_from(plan, depth + 1, child, prune_threshold, accum);
    }
}

// Expand the tree serially down to split_depth, collecting the surviving
// nodes in discovery order.
void expand_prefixes(const std::vector<StagePlan>& plan, std::size_t depth,
                     std::size_t split_depth, const EnumNode& node,
                     double prune_threshold, std::vector<EnumNode>& roots,
                     EnumAccum& prefix_accum) {
    if (depth == split_depth) {
        roots.push_back(node);
        return;
    }
    const StagePlan& step = plan[depth];
    PhaseController controller = node.controller;
    const double theta =
        controller.next_phase(step.stage, step.index, node.posterior);
    for (const int u : {+1, -1}) {
        EnumNode child{node.posterior, controller};
        child.posterior.update(u, theta, step.stage, step.visibility);
        child.controller.record_outcome(u);
        if (child.posterior.normalization() < prune_threshold) {
            prefix_accum.pruned.add(child.posterior.normalization());
            continue;
        }
        expand_prefixes(plan, depth + 1, split_depth, child, prune_threshold,
                        roots, prefix_accum);
    }
}

ExactDetail finish_detail(const EnumAccum& accum) {
    return {accum.sharpness.value(), accum.probability.value(),
            accum.pruned.value(), accum.leaves};
}

VarianceReport make_report(const char* method, const Schedule& schedule,
                           const MeasurementModel& model) {
    VarianceReport report;
    report.method = method;
    report.max_stage = schedule.max_stage();
    report.base_detections = schedule.base_detections();
    report.increment = schedule.increment();
    report.visibility = model.visibility();
    report.t2_over_tau = model.t2_over_tau();
    report.total_time = schedule.total_time();
    return report;
}

double variance_from_sharpness_sum(double s) {
    if (!(s > 0.0)) return std::numeric_limits<double>::infinity();
    return 1.0 / (s * s) - 1.0;
}

void check_enumeration_cap(const Schedule& schedule,
                           const ExactOptions& options) {
    if (schedule.total_detections() > options.max_detections)
        throw std::invalid_argument(
            "schedule exceeds the exact enumeration cap");
}

}  // namespace

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RAMSEYOPT_WORKERS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    return omp_get_max_threads();
}

ExactDetail exact_variance_detail(const Schedule& schedule,
                                  const Policy& policy,
                                  const MeasurementModel& model,
                                  const ExactOptions& options) {
    check_enumeration_cap(schedule, options);
    const std::vector<StagePlan> plan = build_plan(schedule, model);
    const std::size_t split_depth =
        std::min<std::size_t>(plan.size(), kSplitDepth);

    EnumNode root{FourierPosterior(schedule.total_time()),
                  PhaseController(policy)};
    std::vector<EnumNode> roots;
    EnumAccum prefix_accum;
    expand_prefixes(plan, 0, split_depth, root, options.prune_threshold,
                    roots, prefix_accum);

    std::vector<EnumAccum> partials(roots.size());
    const int workers = resolve_workers(options.workers);
    const std::int64_t root_count = static_cast<std::int64_t>(roots.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::int64_t i = 0; i < root_count; ++i)
        enumerate_from(plan, split_depth, roots[i], options.prune_threshold,
                       partials[i]);

    // Combine in subtree order: independent of thread assignment.
    EnumAccum total = prefix_accum;
    for (const EnumAccum& p : partials) {
        total.sharpness.add(p.sharpness.value());
        total.probability.add(p.probability.value());
        total.pruned.add(p.pruned.value());
        total.leaves += p.leaves;
    }
    return finish_detail(total);
}

VarianceReport exact_variance(const Schedule& schedule, const Policy& policy,
                              const MeasurementModel& model,
                              const ExactOptions& options) {
    const ExactDetail detail =
        exact_variance_detail(schedule, policy, model, options);
    VarianceReport report = make_report("exact", schedule, model);
    report.v_h = variance_from_sharpness_sum(detail.sharpness_sum);
    report.pruned_mass = detail.pruned_mass;
    report.workers = resolve_workers(options.workers);
    return report;
}

ExactDetail exact_variance_reference(const Schedule& schedule,
                                     const Policy& policy,
                                     const MeasurementModel& model,
                                     const ExactOptions& options) {
    check_enumeration_cap(schedule, options);
    const std::vector<StagePlan> plan = build_plan(schedule, model);
    EnumNode root{FourierPosterior(schedule.total_time()),
                  PhaseController(policy)};
    EnumAccum accum;
    enumerate_from(plan, 0, root, options.prune_threshold, accum);
    return finish_detail(accum);
}

namespace {

// One trial of the measurement; returns c = cos(estimate - true phase).
double trial_cosine(const Schedule& schedule, const Policy& policy,
                    const MeasurementModel& model, std::uint64_t master_seed,
                    std::uint64_t trial, FourierPosterior& workspace) {
    RngStream rng(master_seed, trial);
    const double phase = pi - two_pi * rng.uniform01();
    const TrialResult result =
        run_trial(schedule, policy, model, phase, rng, workspace);
    return std::cos(result.estimate - phase);
}

VarianceReport finish_monte_carlo(VarianceReport report, double sum_c,
                                  double sum_c2, std::uint64_t trials) {
    const double n = static_cast<double>(trials);
    const double mean = sum_c / n;
    const double var_c =
        std::max(0.0, (sum_c2 - sum_c * sum_c / n) / (n - 1.0));
    if (!(mean > 0.0)) {
        report.v_h = std::numeric_limits<double>::infinity();
        report.std_error = std::numeric_limits<double>::infinity();
        return report;
    }
    report.v_h = 1.0 / (mean * mean) - 1.0;
    report.std_error =
        2.0 * std::sqrt(var_c) / (std::sqrt(n) * mean * mean * mean);
    return report;
}

}  // namespace

VarianceReport monte_carlo_variance(const Schedule& schedule,
                                    const Policy& policy,
                                    const MeasurementModel& model,
                                    std::uint64_t trials,
                                    std::uint64_t master_seed, int workers) {
    if (trials < 2) throw std::invalid_argument("need at least 2 trials");
    const std::uint64_t blocks = (trials + kBlockSize - 1) / kBlockSize;
    std::vector<double> block_sum(blocks), block_sum2(blocks);
    const int worker_count = resolve_workers(workers);
    const std::size_t posterior_size = schedule.total_time();

#pragma omp parallel num_threads(worker_count)
    {
        FourierPosterior workspace(posterior_size);
#pragma omp for schedule(dynamic)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
            CompensatedSum sum_c, sum_c2;
            const std::uint64_t begin = b * kBlockSize;
            const std::uint64_t end =
                std::min<std::uint64_t>(trials, begin + kBlockSize);
            for (std::uint64_t i = begin; i < end; ++i) {
                const double c = trial_cosine(schedule, policy, model,
                                              master_seed, i, workspace);
                sum_c.add(c);
                sum_c2.add(c * c);
            }
            block_sum[b] = sum_c.value();
            block_sum2[b] = sum_c2.value();
        }
    }

    // Block order, not completion order.
    CompensatedSum sum_c, sum_c2;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        sum_c.add(block_sum[b]);
        sum_c2.add(block_sum2[b]);
    }

    VarianceReport report = make_report("monte_carlo", schedule, model);
    report.trials = trials;
    report.master_seed = master_seed;
    report.workers = worker_count;
    return finish_monte_carlo(std::move(report), sum_c.value(), sum_c2.value(),
                              trials);
}

VarianceReport monte_carlo_variance_reference(const Schedule& schedule,
                                              const Policy& policy,
                                              const MeasurementModel& model,
                                              std::uint64_t trials,
                                              std::uint64_t master_seed) {
    if (trials < 2) throw std::invalid_argument("need at least 2 trials");
    FourierPosterior workspace(schedule.total_time());
    CompensatedSum sum_c, sum_c2;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const double c = trial_cosine(schedule, policy, model, master_seed, i,
                                      workspace);
        sum_c.add(c);
        sum_c2.add(c * c);
    }
    VarianceReport report = make_report("monte_carlo", schedule, model);
    report.trials = trials;
    report.master_seed = master_seed;
    report.workers = 1;
    return finish_monte_carlo(std::move(report), sum_c.value(), sum_c2.value(),
                              trials);
}

double holevo_lower_bound(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("N must be >= 1");
    const double t = std::tan(pi / (static_cast<double>(n) + 2.0));
    return t * t;
}

double equal_time_bound(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("N must be >= 1");
    return 1.0 / static_cast<double>(n);
}

double equal_time_dynamic_range(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("N must be >= 1");
    return pi / std::sqrt(static_cast<double>(n));
}

std::vector<VarianceReport> curve_sweep(PolicyKind family,
                                        const MeasurementModel& model, int g,
                                        int f, std::span<const int> k_list,
                                        std::uint64_t trials,
                                        std::uint64_t master_seed,
                                        int workers) {
    if (family == PolicyKind::decision_tree || family == PolicyKind::hybrid)
        throw std::invalid_argument(
            "curve_sweep needs a parameterless policy family; optimize the "
            "tree variants per schedule and evaluate them individually");
    std::vector<VarianceReport> rows;
    rows.reserve(k_list.size());
    for (const int k : k_list) {
        const Schedule schedule(k, g, f);
        Policy policy = family == PolicyKind::nonadaptive
                            ? Policy::nonadaptive(schedule)
                        : family == PolicyKind::adaptive_homodyne
                            ? Policy::adaptive_homodyne(schedule)
                            : Policy::cappellaro(schedule);
        const std::uint64_t row_seed =
            derive_seed(master_seed, static_cast<std::uint64_t>(k));
        rows.push_back(monte_carlo_variance(schedule, policy, model, trials,
                                            row_seed, workers));
    }
    return rows;
}

}  // namespace ramsey
