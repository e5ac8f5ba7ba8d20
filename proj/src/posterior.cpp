#include "ramsey/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ramsey/model.hpp"

namespace ramsey {

namespace {
constexpr double kUniformCoeff = 1.0 / two_pi;
// Coefficients this far below b_0 are indistinguishable from accumulated
// roundoff; arg() of such a value is noise that would flip the adaptive
// phase rules between unrelated angles, so the zero convention applies.
constexpr double kDegenerateRatio = 1e-12;
}

FourierPosterior::FourierPosterior(std::size_t max_index)
    : coeffs_(max_index + 1, std::complex<double>(0.0, 0.0)),
      stride_(0),
      log_weight_(0.0) {
    if (max_index < 1)
        throw std::invalid_argument("max_index must be >= 1");
    coeffs_[0] = kUniformCoeff;
}

void FourierPosterior::reset() {
    // Only the lattice entries were ever written; clear just those.
    const std::size_t step = stride_ == 0 ? coeffs_.size() : stride_;
    for (std::size_t w = 0; w < coeffs_.size(); w += step)
        coeffs_[w] = 0.0;
    coeffs_[0] = kUniformCoeff;
    stride_ = 0;
    log_weight_ = 0.0;
}

void FourierPosterior::update(int outcome, double theta, int stage,
                              double visibility) {
    if (outcome != 1 && outcome != -1)
        throw std::invalid_argument("outcome must be +1 or -1");
    if (!(visibility >= 0.0) || visibility > 1.0)
        throw std::invalid_argument("visibility must be in [0, 1]");
    if (stage < 0 || stage >= 63)
        throw std::invalid_argument("stage out of range");
    const std::size_t shift = std::size_t{1} << stage;
    const std::size_t w_max = max_index();
    if (shift > w_max)
        throw std::invalid_argument("2^stage exceeds stored coefficient range");

    // Gather the old values onto the new (finer) lattice so the update is
    // a plain 3-point stencil with offset shift/new_stride.
    const std::size_t new_stride = std::gcd(stride_, shift);
    const std::size_t last = w_max / new_stride;
    const std::size_t ratio = shift / new_stride;
    snapshot_.resize(last + 1);
    if (stride_ == new_stride) {
        for (std::size_t j = 0; j <= last; ++j)
            snapshot_[j] = coeffs_[j * new_stride];
    } else if (stride_ == 0) {
        std::fill(snapshot_.begin(), snapshot_.end(),
                  std::complex<double>(0.0, 0.0));
        snapshot_[0] = coeffs_[0];
    } else {
        const std::size_t old_ratio = stride_ / new_stride;
        for (std::size_t j = 0; j <= last; ++j)
            snapshot_[j] = j % old_ratio == 0
                               ? coeffs_[j * new_stride]
                               : std::complex<double>(0.0, 0.0);
    }

    const double uv4 = 0.25 * outcome * visibility;
    const std::complex<double> e_minus(std::cos(theta), -std::sin(theta));
    const std::complex<double> e_plus = std::conj(e_minus);

    // b_0 first: its shifted terms form a conjugate pair, so it stays
    // exactly real, and 2*pi*b_0 is this detection's probability.
    const double new_b0 = 0.5 * snapshot_[0].real() +
                          2.0 * uv4 * (snapshot_[ratio] * e_plus).real();
    const double norm = two_pi * new_b0;
    if (!(norm > 0.0)) {
        // Probability-zero branch (only reachable at V = 1 on an outcome
        // the posterior excludes). Park the state on the uniform prior
        // with zero weight so callers see probability 0 without NaNs.
        for (std::size_t j = 1; j <= last; ++j) coeffs_[j * new_stride] = 0.0;
        coeffs_[0] = kUniformCoeff;
        stride_ = 0;
        log_weight_ = -std::numeric_limits<double>::infinity();
        return;
    }

    // Write the renormalized coefficients directly (2*pi*b_0 = 1).
    const double inv = 1.0 / norm;
    coeffs_[0] = kUniformCoeff;
    for (std::size_t j = 1; j <= last; ++j) {
        const std::complex<double> left =
            j >= ratio ? snapshot_[j - ratio]
                       : std::conj(snapshot_[ratio - j]);
        const std::complex<double> right =
            j + ratio <= last ? snapshot_[j + ratio]
                              : std::complex<double>(0.0, 0.0);
        coeffs_[j * new_stride] =
            inv * (0.5 * snapshot_[j] +
                   uv4 * (left * e_minus + right * e_plus));
    }
    stride_ = new_stride;
    log_weight_ += std::log(norm);
}

std::complex<double> FourierPosterior::coefficient(long long w) const {
    const std::size_t a = std::size_t(w < 0 ? -w : w);
    if (a > max_index()) return {0.0, 0.0};
    const std::complex<double> c = coeffs_[a];
    return w < 0 ? std::conj(c) : c;
}

double FourierPosterior::normalization() const {
    return std::exp(log_weight_) * two_pi * coeffs_[0].real();
}

double FourierPosterior::phase_estimate() const {
    const std::complex<double> b1 = coeffs_[1];
    if (std::abs(b1) <= kDegenerateRatio * coeffs_[0].real()) return 0.0;
    return wrap_pi(-std::arg(b1));
}

double FourierPosterior::scaled_phase_estimate(int stage) const {
    if (stage < 0 || stage >= 63)
        throw std::invalid_argument("stage out of range");
    const std::size_t shift = std::size_t{1} << stage;
    if (shift > max_index())
        throw std::invalid_argument("2^stage exceeds stored coefficient range");
    const std::complex<double> b = coeffs_[shift];
    if (std::abs(b) <= kDegenerateRatio * coeffs_[0].real()) return 0.0;
    return wrap_pi(-std::arg(b));
}

double FourierPosterior::sharpness() const {
    return std::abs(coeffs_[1]) / coeffs_[0].real();
}

double FourierPosterior::density(double phi) const {
    const std::size_t step = stride_ == 0 ? coeffs_.size() : stride_;
    double acc = coeffs_[0].real();
    for (std::size_t w = step; w < coeffs_.size(); w += step) {
        // b_w e^{iw phi} + b_{-w} e^{-iw phi} = 2 Re(b_w e^{iw phi})
        const std::complex<double> e(std::cos(w * phi), std::sin(w * phi));
        acc += 2.0 * (coeffs_[w] * e).real();
    }
    return acc;
}

double holevo_variance(double sharpness) {
    if (sharpness == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (sharpness * sharpness) - 1.0;
}

}  // namespace ramsey
