// Acceptance suite: one pass/fail line per criterion. Run with no
// arguments for the full suite, or --only N[,M...] for a subset.
// Criterion 8 drives the command-line binary; point --bin (or the
// RAMSEYOPT_BIN environment variable) at it if the default location
// does not apply.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "grid_oracle.hpp"
#include "ramsey/eval.hpp"
#include "ramsey/io.hpp"
#include "ramsey/model.hpp"
#include "ramsey/posterior.hpp"
#include "ramsey/protocol.hpp"
#include "ramsey/pso.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;
namespace fs = std::filesystem;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string g_binary_path;  // for criterion 8

struct Check {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& message) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += message;
        }
    }
    void note(const std::string& message) {
        if (!detail.empty()) detail += "; ";
        detail += message;
    }
};

Policy frozen_policy(PolicyKind kind, const Schedule& s, std::uint64_t seed) {
    if (kind == PolicyKind::decision_tree || kind == PolicyKind::hybrid) {
        RngStream rng(seed, 0);
        std::vector<double> inc(Policy::parameter_count(s));
        for (double& x : inc) x = rng.uniform(0.0, two_pi);
        return Policy::from_vector(kind, s, inc);
    }
    if (kind == PolicyKind::nonadaptive) return Policy::nonadaptive(s);
    if (kind == PolicyKind::adaptive_homodyne)
        return Policy::adaptive_homodyne(s);
    return Policy::cappellaro(s);
}

const PolicyKind kAllKinds[] = {
    PolicyKind::nonadaptive, PolicyKind::decision_tree,
    PolicyKind::adaptive_homodyne, PolicyKind::cappellaro, PolicyKind::hybrid};

void assert_bound(Check& check, double v_h, std::int64_t n,
                  const std::string& label) {
    check.require(v_h >= holevo_lower_bound(n) - 1e-9,
                  label + ": V_H below the Holevo bound");
}

// ---------------------------------------------------------------------
// criterion 1: single-detection exactness
Check criterion_1() {
    Check check;
    const Schedule s(0, 1, 0);
    const MeasurementModel ideal(1.0, kInf);
    const VarianceReport r = exact_variance(s, Policy::nonadaptive(s), ideal);
    check.require(std::abs(r.v_h - 3.0) < 1e-12,
                  "exact V_H != 3 (got " + format_double(r.v_h) + ")");
    assert_bound(check, r.v_h, 1, "single detection");
    check.note("V_H = " + format_double(r.v_h));
    return check;
}

// ---------------------------------------------------------------------
// criterion 2: grid-oracle equivalence on random sequences
Check criterion_2() {
    Check check;
    RngStream rng(20260809, 2);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const int length = 1 + int(rng.next_u64() % 20);
        struct Det {
            int u;
            double theta;
            int k;
            double v;
        };
        std::vector<Det> seq;
        std::size_t max_index = 0;
        for (int i = 0; i < length; ++i) {
            Det d{rng.uniform01() < 0.5 ? +1 : -1, rng.uniform(0.0, two_pi),
                  int(rng.next_u64() % 6), rng.uniform(0.3, 1.0)};
            seq.push_back(d);
            max_index += std::size_t{1} << d.k;
        }
        FourierPosterior p(std::max<std::size_t>(max_index, 1));
        testing::GridPosterior grid;
        for (const Det& d : seq) {
            p.update(d.u, d.theta, d.k, d.v);
            grid.update(d.u, d.theta, d.k, d.v);
        }
        for (std::size_t j = 0; j < grid.points(); ++j)
            worst = std::max(worst,
                             std::abs(p.density(grid.node(j)) -
                                      grid.density(j)));
    }
    check.require(worst < 1e-9, "max deviation " + format_double(worst));
    check.note("max deviation " + format_double(worst));
    return check;
}

// ---------------------------------------------------------------------
// criterion 3: exact vs Monte Carlo across the five policy variants
Check criterion_3() {
    Check check;
    const Schedule s(1, 2, 1);  // 5 detections, N = 7
    check.require(s.total_detections() == 5, "expected 5 detections");
    check.require(s.total_time() == 7, "expected N = 7");
    const MeasurementModel model(0.85, 1000.0);
    for (const PolicyKind kind : kAllKinds) {
        const Policy policy = frozen_policy(kind, s, 0xC3);
        const VarianceReport exact = exact_variance(s, policy, model);
        const VarianceReport mc =
            monte_carlo_variance(s, policy, model, 1u << 16, 0xAC3);
        const std::string label = to_string(kind);
        check.require(std::isfinite(mc.v_h), label + ": non-finite estimate");
        check.require(std::abs(mc.v_h - exact.v_h) <= 3.0 * mc.std_error,
                      label + ": |MC - exact| = " +
                          format_double(std::abs(mc.v_h - exact.v_h)) +
                          " > 3 SE = " + format_double(3.0 * mc.std_error));
        assert_bound(check, exact.v_h, s.total_time(), label);
        assert_bound(check, mc.v_h, s.total_time(), label + " (MC)");
    }
    return check;
}

// ---------------------------------------------------------------------
// criterion 4: bound compliance across the evaluated configurations
Check criterion_4() {
    Check check;
    // criterion 1 configuration
    {
        const Schedule s(0, 1, 0);
        const MeasurementModel ideal(1.0, kInf);
        assert_bound(check,
                     exact_variance(s, Policy::nonadaptive(s), ideal).v_h, 1,
                     "criterion 1 config");
    }
    // criterion 3 configurations
    {
        const Schedule s(1, 2, 1);
        const MeasurementModel model(0.85, 1000.0);
        for (const PolicyKind kind : kAllKinds) {
            const Policy policy = frozen_policy(kind, s, 0xC3);
            assert_bound(check, exact_variance(s, policy, model).v_h,
                         s.total_time(), "criterion 3 " + to_string(kind));
            assert_bound(
                check,
                monte_carlo_variance(s, policy, model, 1u << 16, 0xAC3).v_h,
                s.total_time(), "criterion 3 MC " + to_string(kind));
        }
    }
    // criterion 6(a) configurations (6(b) is asserted within criterion 6)
    {
        const MeasurementModel model(0.85, 1000.0);
        for (const int k : {3, 4, 5}) {
            const Schedule s(k, 6, 2);
            const std::uint64_t seed = derive_seed(0x6A, std::uint64_t(k));
            for (const PolicyKind kind :
                 {PolicyKind::nonadaptive, PolicyKind::cappellaro}) {
                const VarianceReport r = monte_carlo_variance(
                    s, frozen_policy(kind, s, 0), model, 1u << 16, seed);
                assert_bound(check, r.v_h, s.total_time(),
                             "criterion 6a K=" + std::to_string(k) + " " +
                                 to_string(kind));
            }
        }
    }
    check.note("criteria 1, 3, and 6(a) configurations re-evaluated");
    return check;
}

// ---------------------------------------------------------------------
// criterion 5: schedule algebra
Check criterion_5() {
    Check check;
    check.require(Schedule(9, 6, 2).total_time() == 8164,
                  "total_time(6,2,9) != 8164");
    for (int k = 0; k <= 12; ++k)
        for (int g = 1; g <= 64; ++g)
            for (int f = 0; f <= 16; ++f) {
                const Schedule s(k, g, f);
                std::int64_t direct = 0;
                for (int j = 0; j <= k; ++j)
                    direct += std::int64_t(s.detections_at_stage(j)) << j;
                if (s.total_time() != direct) {
                    check.require(false,
                                  "closed form mismatch at K=" +
                                      std::to_string(k) + " G=" +
                                      std::to_string(g) + " F=" +
                                      std::to_string(f));
                    return check;
                }
            }
    check.note("exhaustive K<=12, G<=64, F<=16");
    return check;
}

// ---------------------------------------------------------------------
// criterion 6: figure-level ordinal reproduction
Check criterion_6() {
    Check check;

    // (a) f_d = 0.85: Cappellaro beats nonadaptive at every K
    {
        const MeasurementModel model(0.85, 1000.0);
        for (const int k : {3, 4, 5}) {
            const Schedule s(k, 6, 2);
            const double n = double(s.total_time());
            const std::uint64_t seed = derive_seed(0x6A, std::uint64_t(k));
            const VarianceReport non = monte_carlo_variance(
                s, Policy::nonadaptive(s), model, 1u << 16, seed);
            const VarianceReport capp = monte_carlo_variance(
                s, Policy::cappellaro(s), model, 1u << 16, seed);
            assert_bound(check, non.v_h, s.total_time(),
                         "6a nonadaptive K=" + std::to_string(k));
            assert_bound(check, capp.v_h, s.total_time(),
                         "6a cappellaro K=" + std::to_string(k));
            const double gap = non.v_h * n - capp.v_h * n;
            const double combined =
                3.0 * n * std::hypot(non.std_error, capp.std_error);
            check.require(gap > combined,
                          "K=" + std::to_string(k) +
                              ": cappellaro not below nonadaptive by 3 SE "
                              "(gap " +
                              format_double(gap) + ", 3 SE " +
                              format_double(combined) + ")");
            std::cerr << "  [6a] K=" << k << "  VH*N nonadaptive "
                      << format_double(non.v_h * n) << "  cappellaro "
                      << format_double(capp.v_h * n) << '\n';
        }
    }

    // (b) f_d = 0.95: swarm-optimized hybrid matches or beats Cappellaro
    {
        const MeasurementModel model(0.95, 1000.0);
        for (const int k : {3, 4, 5}) {
            const Schedule s(k, 6, 2);
            const std::uint64_t train_seed =
                derive_seed(0x6B7, std::uint64_t(k));
            const std::uint64_t validation_seed =
                derive_seed(0x6BF, std::uint64_t(k));

            const Objective training = [&](std::span<const double> pos) {
                const Policy policy =
                    Policy::from_vector(PolicyKind::hybrid, s, pos);
                return monte_carlo_variance(s, policy, model, 1u << 14,
                                            train_seed)
                    .v_h;
            };

            SwarmConfig swarm;  // paper defaults
            std::cerr << "  [6b] K=" << k << ": training hybrid ("
                      << Policy::parameter_count(s) << " parameters)\n";
            const auto t0 = std::chrono::steady_clock::now();
            const IterationCallback progress = [&](const TracePoint& point) {
                if (point.iteration % 50 == 0 && point.iteration > 0) {
                    const double secs =
                        std::chrono::duration_cast<
                            std::chrono::duration<double>>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
                    std::cerr << "  [6b] K=" << k << " iteration "
                              << point.iteration << "/300  best "
                              << format_double(point.best_value) << "  ("
                              << int(secs) << " s)\n";
                }
            };
            const OptimizeResult trained =
                optimize(training, swarm, Policy::parameter_count(s),
                         derive_seed(0x6B5, std::uint64_t(k)), nullptr,
                         progress);

            const Policy hybrid = Policy::from_vector(PolicyKind::hybrid, s,
                                                      trained.best_position);
            const VarianceReport hybrid_score = monte_carlo_variance(
                s, hybrid, model, 1u << 16, validation_seed);
            const VarianceReport capp_score =
                monte_carlo_variance(s, Policy::cappellaro(s), model,
                                     1u << 16, validation_seed);
            assert_bound(check, hybrid_score.v_h, s.total_time(),
                         "6b hybrid K=" + std::to_string(k));
            assert_bound(check, capp_score.v_h, s.total_time(),
                         "6b cappellaro K=" + std::to_string(k));
            const double slack =
                3.0 * std::hypot(hybrid_score.std_error,
                                 capp_score.std_error);
            check.require(
                hybrid_score.v_h <= capp_score.v_h + slack,
                "K=" + std::to_string(k) + ": hybrid " +
                    format_double(hybrid_score.v_h) + " above cappellaro " +
                    format_double(capp_score.v_h) + " + 3 SE " +
                    format_double(slack));
            std::cerr << "  [6b] K=" << k << "  VH hybrid "
                      << format_double(hybrid_score.v_h) << "  cappellaro "
                      << format_double(capp_score.v_h) << "  (3 SE "
                      << format_double(slack) << ")\n";
        }
    }
    return check;
}

// ---------------------------------------------------------------------
// criterion 7: swarm sanity on the sphere benchmark
Check criterion_7() {
    Check check;
    SwarmConfig cfg;  // chi = 0.729, c_g = c_l = 2.05, 10 particles, 300 it
    cfg.lower_bound = -5.0;
    cfg.upper_bound = 5.0;
    cfg.max_velocity = 5.0;
    const Objective sphere = [](std::span<const double> x) {
        double s = 0.0;
        for (const double v : x) s += v * v;
        return s;
    };
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const OptimizeResult r = optimize(sphere, cfg, 10, seed);
        if (r.best_value < 1e-3) ++hits;
    }
    check.require(hits >= 18, "only " + std::to_string(hits) +
                                  "/20 runs reached 1e-3");
    check.note(std::to_string(hits) + "/20 runs below 1e-3");

    const OptimizeResult a = optimize(sphere, cfg, 10, 5);
    const OptimizeResult b = optimize(sphere, cfg, 10, 5);
    bool identical = a.trace.size() == b.trace.size() &&
                     a.best_value == b.best_value &&
                     a.best_position == b.best_position;
    if (identical)
        for (std::size_t i = 0; i < a.trace.size(); ++i)
            identical = identical &&
                        a.trace[i].best_value == b.trace[i].best_value &&
                        a.trace[i].mean_value == b.trace[i].mean_value &&
                        a.trace[i].spread == b.trace[i].spread;
    check.require(identical, "same seed produced different traces");
    return check;
}

// ---------------------------------------------------------------------
// criterion 8: byte-identical reruns of the command-line tool
struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("ramseyopt-accept-" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run_tool(const std::string& args) {
    const std::string cmd = '"' + g_binary_path + "\" " + args;
    return std::system(cmd.c_str());
}

std::string strip_timestamp(const std::string& metadata) {
    std::istringstream in(metadata);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("timestamp ", 0) != 0) out << line << '\n';
    return out.str();
}

Check criterion_8() {
    Check check;
    if (g_binary_path.empty() || !fs::exists(g_binary_path)) {
        check.require(false, "ramseyopt binary not found (use --bin or "
                             "RAMSEYOPT_BIN)");
        return check;
    }
    TempDir dir;

    // identical command (including --out) run twice, snapshotting between
    const std::string csv = (dir.path / "eval.csv").string();
    const std::string evaluate =
        "evaluate --protocol cappellaro --k 2,3 --g 2 --f 1 --fd 0.85 "
        "--t2 1000 --trials 8192 --seed 11 --workers 2 --out \"" + csv + '"';
    check.require(run_tool(evaluate) == 0, "first evaluate run failed");
    if (!check.pass) return check;
    const std::string csv_first = read_text_file(csv);
    const std::string meta_first = read_text_file(csv + ".meta");
    check.require(run_tool(evaluate) == 0, "second evaluate run failed");
    if (!check.pass) return check;
    check.require(read_text_file(csv) == csv_first,
                  "evaluate outputs differ");
    check.require(strip_timestamp(read_text_file(csv + ".meta")) ==
                      strip_timestamp(meta_first),
                  "evaluate sidecars differ beyond the timestamp");

    const std::string pol = (dir.path / "tiny.policy").string();
    const std::string optimize =
        "optimize --protocol hybrid --k 1 --g 2 --f 1 --fd 0.95 --t2 1000 "
        "--pso-iterations 5 --pso-particles 4 --pso-training-trials 512 "
        "--trials 1024 --seed 21 --validation-seed 22 --workers 2 --out \"" +
        pol + "\" 2>/dev/null";
    check.require(run_tool(optimize) == 0, "first optimize run failed");
    if (!check.pass) return check;
    const std::string pol_first = read_text_file(pol);
    const std::string scores_first = read_text_file(pol + ".scores.csv");
    const std::string trace_first = read_text_file(pol + ".trace.csv");
    const std::string pmeta_first = read_text_file(pol + ".meta");
    check.require(run_tool(optimize) == 0, "second optimize run failed");
    if (!check.pass) return check;
    check.require(read_text_file(pol) == pol_first, "policy files differ");
    check.require(read_text_file(pol + ".scores.csv") == scores_first,
                  "score files differ");
    check.require(read_text_file(pol + ".trace.csv") == trace_first,
                  "trace files differ");
    check.require(strip_timestamp(read_text_file(pol + ".meta")) ==
                      strip_timestamp(pmeta_first),
                  "optimize sidecars differ beyond the timestamp");

    // exit-code contract: config errors and runtime failures are distinct
    const int config_error =
        run_tool("evaluate --fd 1.5 --k 1 2>/dev/null");
    const int runtime_error = run_tool(
        "evaluate --method exact --protocol cappellaro --k 5 2>/dev/null");
    check.require(WIFEXITED(config_error) &&
                      WEXITSTATUS(config_error) == 2,
                  "config error did not exit with status 2");
    check.require(WIFEXITED(runtime_error) &&
                      WEXITSTATUS(runtime_error) == 1,
                  "runtime failure did not exit with status 1");
    return check;
}

// ---------------------------------------------------------------------
// criterion 9: invariant suite over randomized schedules and policies
Check criterion_9() {
    Check check;
    RngStream rng(0x99, 9);

    // sparsity: off-lattice coefficients are exactly zero at every stage
    for (int rep = 0; rep < 10; ++rep) {
        const Schedule s(1 + int(rng.next_u64() % 3),
                         1 + int(rng.next_u64() % 3),
                         int(rng.next_u64() % 3));
        const MeasurementModel model(0.6 + 0.4 * rng.uniform01(), 1000.0);
        FourierPosterior p(s.total_time());
        for (int k = s.max_stage(); k >= 0; --k)
            for (int m = 0; m < s.detections_at_stage(k); ++m) {
                p.update(rng.uniform01() < 0.5 ? +1 : -1,
                         rng.uniform(0.0, two_pi), k,
                         model.decayed_visibility(k));
                const std::size_t lattice = std::size_t{1} << k;
                for (std::size_t w = 1;
                     w <= std::size_t(s.total_time()); ++w)
                    if (w % lattice != 0 &&
                        p.coefficient(w) != std::complex<double>(0.0, 0.0)) {
                        check.require(false,
                                      "nonzero off-lattice coefficient");
                        return check;
                    }
            }
    }

    // reality and positivity of reconstructed posteriors, with the
    // conjugate pairing expanded explicitly
    for (int rep = 0; rep < 10; ++rep) {
        const int length = 1 + int(rng.next_u64() % 12);
        FourierPosterior p(1u << 9);  // ample for 12 detections at k <= 4
        for (int i = 0; i < length; ++i) {
            const int k = int(rng.next_u64() % 5);
            p.update(rng.uniform01() < 0.5 ? +1 : -1,
                     rng.uniform(0.0, two_pi), k, rng.uniform(0.3, 1.0));
        }
        for (int j = 0; j < 257; ++j) {
            const double phi = -pi + two_pi * j / 257.0;
            std::complex<double> value = 0.0;
            for (long long w = -(long long)p.max_index();
                 w <= (long long)p.max_index(); ++w)
                value += p.coefficient(w) *
                         std::exp(std::complex<double>(0.0, w * phi));
            check.require(std::abs(value.imag()) < 1e-12,
                          "complex reconstruction not real");
            check.require(value.real() > -1e-12,
                          "reconstructed density negative");
            if (!check.pass) return check;
        }
    }

    // pi-shift / outcome-swap invariance of the exact variance
    for (int rep = 0; rep < 5; ++rep) {
        const Schedule s(1 + int(rng.next_u64() % 2),
                         1 + int(rng.next_u64() % 2),
                         int(rng.next_u64() % 2));
        const MeasurementModel model(0.5 + 0.5 * rng.uniform01(), 1000.0);
        std::vector<double> inc(Policy::parameter_count(s));
        for (double& x : inc) x = rng.uniform(0.0, two_pi);
        const std::size_t j =
            1 + std::size_t(rng.next_u64() %
                            std::uint64_t(s.total_detections() - 1));
        std::vector<double> shifted = inc;
        shifted[2 * (j - 1) + 0] = wrap_two_pi(inc[2 * (j - 1) + 0] + pi);
        shifted[2 * (j - 1) + 1] = wrap_two_pi(inc[2 * (j - 1) + 1] + pi);
        shifted[2 * j + 0] = wrap_two_pi(inc[2 * j + 1] - pi);
        shifted[2 * j + 1] = wrap_two_pi(inc[2 * j + 0] - pi);
        const double base =
            exact_variance(s, Policy::decision_tree(s, inc), model).v_h;
        const double transformed =
            exact_variance(s, Policy::decision_tree(s, shifted), model).v_h;
        check.require(std::abs(base - transformed) <=
                          1e-12 * std::max(1.0, std::abs(base)),
                      "pi-shift transform changed the exact variance");
    }

    // leaf probabilities sum to one
    for (int rep = 0; rep < 10; ++rep) {
        const Schedule s(1 + int(rng.next_u64() % 2),
                         1 + int(rng.next_u64() % 2),
                         int(rng.next_u64() % 2));
        const MeasurementModel model(0.5 + 0.45 * rng.uniform01(), 1000.0);
        const PolicyKind kind = kAllKinds[rep % 5];
        const ExactDetail d = exact_variance_detail(
            s, frozen_policy(kind, s, 0x99 + rep), model);
        check.require(std::abs(d.leaf_probability_sum - 1.0) <= 1e-10,
                      "leaf probabilities sum to " +
                          format_double(d.leaf_probability_sum));
    }
    return check;
}

struct Criterion {
    int number;
    const char* name;
    std::function<Check()> run;
};

const Criterion kCriteria[] = {
    {1, "single-detection exactness", criterion_1},
    {2, "grid-oracle equivalence", criterion_2},
    {3, "exact vs Monte Carlo, five policy variants", criterion_3},
    {4, "Holevo bound compliance", criterion_4},
    {5, "schedule algebra", criterion_5},
    {6, "figure-level ordering (Cappellaro, optimized hybrid)", criterion_6},
    {7, "swarm sphere benchmark", criterion_7},
    {8, "byte-identical command reruns", criterion_8},
    {9, "posterior and enumeration invariants", criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) {
            std::istringstream list(argv[++i]);
            std::string token;
            while (std::getline(list, token, ','))
                selected.push_back(std::stoi(token));
        } else if (arg == "--bin" && i + 1 < argc) {
            g_binary_path = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--only N[,M...]] [--bin PATH]\n";
            return 2;
        }
    }
    if (g_binary_path.empty()) {
        if (const char* env = std::getenv("RAMSEYOPT_BIN"))
            g_binary_path = env;
        else if (fs::exists("tools/ramseyopt"))
            g_binary_path = "tools/ramseyopt";
    }

    bool all_pass = true;
    for (const Criterion& criterion : kCriteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), criterion.number) ==
                selected.end())
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        Check check;
        try {
            check = criterion.run();
        } catch (const std::exception& e) {
            check.pass = false;
            check.note(std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration_cast<std::chrono::duration<double>>(
                std::chrono::steady_clock::now() - t0)
                .count();
        std::cout << "[" << criterion.number << "] " << criterion.name
                  << " ... " << (check.pass ? "PASS" : "FAIL") << " ("
                  << format_double(std::round(seconds * 100.0) / 100.0)
                  << " s)";
        if (!check.detail.empty()) std::cout << "  -- " << check.detail;
        std::cout << std::endl;
        all_pass = all_pass && check.pass;
    }
    return all_pass ? 0 : 1;
}
