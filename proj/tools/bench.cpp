// Compares the OpenMP evaluation engines against the serial reference
// implementations: same numbers expected (to summation-order roundoff),
// and hopefully less wall time.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <iostream>

#include "ramsey/eval.hpp"

using h_clock = std::chrono::high_resolution_clock;

namespace {

template <typename F>
std::pair<double, double> timed(F&& f) {
    const auto t0 = h_clock::now();
    const double value = f();
    const auto t1 = h_clock::now();
    return {value,
            std::chrono::duration_cast<std::chrono::duration<double>>(t1 - t0)
                .count()};
}

double rel_diff(double a, double b) {
    if (a == b) return 0.0;
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace

int run(int argc, char** argv) {
    int k = 5, g = 6, f = 2;
    double fd = 0.85, t2 = 1000.0;
    std::uint64_t trials = 1u << 14;
    std::uint64_t seed = 1;
    std::string protocol = "cappellaro";
    std::vector<int> workers = {1, 0};
    bool exact = false;

    CLI::App app{"Benchmark the parallel engines against the serial "
                 "reference implementations"};
    app.add_option("--k", k)->capture_default_str();
    app.add_option("--g", g)->capture_default_str();
    app.add_option("--f", f)->capture_default_str();
    app.add_option("--fd", fd)->capture_default_str();
    app.add_option("--t2", t2)->capture_default_str();
    app.add_option("--trials", trials)->capture_default_str();
    app.add_option("--seed", seed)->capture_default_str();
    app.add_option("--protocol", protocol,
                   "nonadaptive | homodyne | cappellaro")
        ->capture_default_str();
    app.add_option("--workers", workers, "worker counts to time (0 = auto)")
        ->delimiter(',')
        ->capture_default_str();
    app.add_flag("--exact", exact,
                 "also benchmark the exact enumeration engines");
    CLI11_PARSE(app, argc, argv);

    const ramsey::Schedule schedule(k, g, f);
    const ramsey::MeasurementModel model(fd, t2);
    const ramsey::PolicyKind kind = ramsey::policy_kind_from_string(protocol);
    ramsey::Policy policy =
        kind == ramsey::PolicyKind::nonadaptive
            ? ramsey::Policy::nonadaptive(schedule)
        : kind == ramsey::PolicyKind::adaptive_homodyne
            ? ramsey::Policy::adaptive_homodyne(schedule)
            : ramsey::Policy::cappellaro(schedule);

    std::cout << "schedule K=" << k << " G=" << g << " F=" << f
              << "  N=" << schedule.total_time() << "  protocol=" << protocol
              << "  fd=" << fd << " t2=" << t2 << "  trials=" << trials
              << "\n\n";

    std::cout << "monte carlo:\n";
    const auto [vh_ref, t_ref] = timed([&] {
        return ramsey::monte_carlo_variance_reference(schedule, policy, model,
                                                      trials, seed)
            .v_h;
    });
    std::cout << "  serial reference      " << t_ref << " s   V_H=" << vh_ref
              << '\n';
    for (const int w : workers) {
        const auto [vh, t] = timed([&] {
            return ramsey::monte_carlo_variance(schedule, policy, model,
                                                trials, seed, w)
                .v_h;
        });
        std::cout << "  block engine (w="
                  << (w > 0 ? std::to_string(w) : std::string("auto"))
                  << ")  " << t << " s   V_H=" << vh
                  << "   speedup=" << t_ref / t
                  << "   rel_diff=" << rel_diff(vh, vh_ref) << '\n';
    }

    if (exact) {
        // a schedule with 20 detections, inside the enumeration cap
        std::cout << "\nexact enumeration (K=3, G=2, F=1):\n";
        const ramsey::Schedule small(3, 2, 1);
        ramsey::Policy small_policy =
            kind == ramsey::PolicyKind::nonadaptive
                ? ramsey::Policy::nonadaptive(small)
            : kind == ramsey::PolicyKind::adaptive_homodyne
                ? ramsey::Policy::adaptive_homodyne(small)
                : ramsey::Policy::cappellaro(small);
        const auto [s_ref, et_ref] = timed([&] {
            return ramsey::exact_variance_reference(small, small_policy, model)
                .sharpness_sum;
        });
        std::cout << "  serial reference      " << et_ref << " s\n";
        for (const int w : workers) {
            ramsey::ExactOptions options;
            options.workers = w;
            const auto [s, et] = timed([&] {
                return ramsey::exact_variance_detail(small, small_policy,
                                                     model, options)
                    .sharpness_sum;
            });
            std::cout << "  split engine (w="
                      << (w > 0 ? std::to_string(w) : std::string("auto"))
                      << ")  " << et << " s   speedup=" << et_ref / et
                      << "   rel_diff=" << rel_diff(s, s_ref) << '\n';
        }
    }
    return 0;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
