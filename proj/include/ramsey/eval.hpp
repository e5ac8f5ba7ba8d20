#ifndef RAMSEY_EVAL_HPP_
#define RAMSEY_EVAL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ramsey/model.hpp"
#include "ramsey/protocol.hpp"

namespace ramsey {

// Kahan compensated accumulator; all reductions in this module go through
// it, in a fixed order, so results are reproducible bit for bit.
class CompensatedSum {
public:
    void add(double x) {
        const double y = x - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

// Effective worker count: explicit value if positive, otherwise the
// RAMSEYOPT_WORKERS environment variable, otherwise the OpenMP default.
int resolve_workers(int requested);

struct VarianceReport {
    std::string method;  // "exact" | "monte_carlo"
    int max_stage = 0;
    int base_detections = 0;
    int increment = 0;
    double visibility = 0.0;
    double t2_over_tau = 0.0;
    std::int64_t total_time = 0;       // N
    double v_h = 0.0;                  // may be infinity
    double std_error = 0.0;            // 0 for exact reports
    std::uint64_t trials = 0;          // 0 for exact reports
    std::uint64_t master_seed = 0;     // 0 for exact reports
    int workers = 1;
    double pruned_mass = 0.0;          // exact reports only

    double v_h_times_n() const { return v_h * double(total_time); }
};

struct ExactOptions {
    int max_detections = 22;        // enumeration cap (2^22 branches)
    double prune_threshold = 1e-30; // drop branches below this probability
    int workers = 0;                // 0 = resolve_workers default
};

struct ExactDetail {
    double sharpness_sum = 0.0;      // S = sum over leaves of P(u)*|b_-1|/b_0
    double leaf_probability_sum = 0.0;
    double pruned_mass = 0.0;
    std::uint64_t leaves = 0;
};

// Exact Holevo variance by enumerating every outcome sequence and summing
// the final |b_-1| weighted by the sequence probability: V_H = S^-2 - 1
// with no sampling error. Throws if the schedule exceeds the enumeration
// cap. The subtree partials are combined in a fixed order, so the result
// does not depend on the worker count.
ExactDetail exact_variance_detail(const Schedule& schedule,
                                  const Policy& policy,
                                  const MeasurementModel& model,
                                  const ExactOptions& options = {});
VarianceReport exact_variance(const Schedule& schedule, const Policy& policy,
                              const MeasurementModel& model,
                              const ExactOptions& options = {});

// Plain single-pass recursive enumeration kept as the reference for the
// split/parallel engine above.
ExactDetail exact_variance_reference(const Schedule& schedule,
                                     const Policy& policy,
                                     const MeasurementModel& model,
                                     const ExactOptions& options = {});

// Monte Carlo Holevo variance: trial i draws its phase uniformly on
// (-pi, pi] from the stream (master_seed, i), runs the policy, and
// records c_i = cos(estimate - phase). V_H = (mean c)^-2 - 1 with the
// delta-method standard error 2 std(c) / (sqrt(trials) mean^3); a
// non-positive mean reports infinite variance. Trials are processed in
// fixed-size blocks whose partial sums are combined in block order, so
// the result is reproducible for any worker count.
VarianceReport monte_carlo_variance(const Schedule& schedule,
                                    const Policy& policy,
                                    const MeasurementModel& model,
                                    std::uint64_t trials,
                                    std::uint64_t master_seed,
                                    int workers = 0);

// Straight serial loop over trials, the reference for the block engine.
VarianceReport monte_carlo_variance_reference(const Schedule& schedule,
                                              const Policy& policy,
                                              const MeasurementModel& model,
                                              std::uint64_t trials,
                                              std::uint64_t master_seed);

// tan^2(pi / (N + 2)): lower bound on V_H for total interaction time N
// shared across interaction times.
double holevo_lower_bound(std::int64_t n);

// 1/N: the variance floor when every detection uses the base time.
double equal_time_bound(std::int64_t n);

// pi/sqrt(N): the same floor expressed as a dynamic range dB/B_max.
double equal_time_dynamic_range(std::int64_t n);

// One Monte Carlo report per K in k_list (schedules (K, G, F)), each with
// a seed derived from (master_seed, K) so rows are independent of
// evaluation order and different policy families sweep against common
// random numbers. The family must be parameterless.
std::vector<VarianceReport> curve_sweep(PolicyKind family,
                                        const MeasurementModel& model, int g,
                                        int f, std::span<const int> k_list,
                                        std::uint64_t trials,
                                        std::uint64_t master_seed,
                                        int workers = 0);

}  // namespace ramsey

#endif  // RAMSEY_EVAL_HPP_
