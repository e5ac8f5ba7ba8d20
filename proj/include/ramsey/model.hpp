#ifndef RAMSEY_MODEL_HPP_
#define RAMSEY_MODEL_HPP_

#include <cmath>
#include <numbers>

namespace ramsey {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Reduce an angle into [0, 2*pi).
inline double wrap_two_pi(double angle) {
    double a = std::fmod(angle, two_pi);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a = 0.0;  // fmod can land exactly on 2*pi after the add
    return a;
}

// Reduce an angle into (-pi, pi].
inline double wrap_pi(double angle) {
    double a = std::fmod(angle, two_pi);
    if (a > pi) a -= two_pi;
    if (a <= -pi) a += two_pi;
    return a;
}

// A single detection: outcome u in {+1,-1}, stage k (interaction time
// 2^k tau), and the control phase that was applied.
struct Detection {
    int outcome;
    int stage;
    double control_phase;
};

// Physical measurement model for Ramsey interferometry on a single spin:
// initial fringe visibility and exponential visibility decay with
// interaction time. The base time tau is the unit in which all interaction
// times (2^k tau) and the coherence time are expressed.
class MeasurementModel {
public:
    // t2_over_tau may be infinity (no decoherence).
    MeasurementModel(double visibility, double t2_over_tau, double tau = 1.0);

    double visibility() const { return visibility_; }
    double t2_over_tau() const { return t2_over_tau_; }
    double tau() const { return tau_; }

    // V = f_d * exp(-2^k / (T2/tau)); equals f_d for infinite T2.
    double decayed_visibility(int stage) const;

    // P(u | phi, theta, k) = (1 + u * V * cos(2^k phi - theta)) / 2.
    double outcome_probability(int outcome, double phi, double theta,
                               int stage) const;

    // Deterministic sampling front-end: +1 iff draw < P(+1 | ...).
    int sample_outcome(double phi, double theta, int stage,
                       double draw) const;

private:
    double visibility_;
    double t2_over_tau_;
    double tau_;
};

// Phase accumulated by a field B over the base time: phi = 2 gamma B tau.
double phase_from_field(double b_field, double gamma, double tau);

// Largest unambiguously measurable field: B_max = pi / (2 gamma tau).
double field_range(double gamma, double tau);

// Holevo variance <-> dynamic range (dB / B_max): V_H = pi^2 * dr^2.
double holevo_variance_from_dynamic_range(double dynamic_range);
double dynamic_range_from_holevo_variance(double holevo_variance);

}  // namespace ramsey

#endif  // RAMSEY_MODEL_HPP_
