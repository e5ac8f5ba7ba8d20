#include "ramsey/model.hpp"

#include <stdexcept>

namespace ramsey {

MeasurementModel::MeasurementModel(double visibility, double t2_over_tau,
                                   double tau)
    : visibility_(visibility), t2_over_tau_(t2_over_tau), tau_(tau) {
    if (!(visibility > 0.0) || visibility > 1.0)
        throw std::invalid_argument("visibility must be in (0, 1]");
    if (std::isnan(t2_over_tau) || !(t2_over_tau > 0.0))
        throw std::invalid_argument("T2/tau must be positive (inf allowed)");
    if (!(tau > 0.0))
        throw std::invalid_argument("tau must be positive");
}

double MeasurementModel::decayed_visibility(int stage) const {
    if (stage < 0) throw std::invalid_argument("stage must be >= 0");
    if (std::isinf(t2_over_tau_)) return visibility_;
    return visibility_ * std::exp(-std::exp2(double(stage)) / t2_over_tau_);
}

double MeasurementModel::outcome_probability(int outcome, double phi,
                                             double theta, int stage) const {
    if (outcome != 1 && outcome != -1)
        throw std::invalid_argument("outcome must be +1 or -1");
    const double v = decayed_visibility(stage);
    // ldexp scales by 2^k exactly
    return 0.5 * (1.0 + outcome * v * std::cos(std::ldexp(phi, stage) - theta));
}

int MeasurementModel::sample_outcome(double phi, double theta, int stage,
                                     double draw) const {
    return draw < outcome_probability(+1, phi, theta, stage) ? +1 : -1;
}

double phase_from_field(double b_field, double gamma, double tau) {
    return 2.0 * gamma * b_field * tau;
}

double field_range(double gamma, double tau) {
    if (!(gamma > 0.0) || !(tau > 0.0))
        throw std::invalid_argument("gamma and tau must be positive");
    return pi / (2.0 * gamma * tau);
}

double holevo_variance_from_dynamic_range(double dynamic_range) {
    return pi * pi * dynamic_range * dynamic_range;
}

double dynamic_range_from_holevo_variance(double holevo_variance) {
    return std::sqrt(holevo_variance) / pi;
}

}  // namespace ramsey
