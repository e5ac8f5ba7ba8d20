#ifndef RAMSEY_POSTERIOR_HPP_
#define RAMSEY_POSTERIOR_HPP_

#include <complex>
#include <cstddef>
#include <vector>

namespace ramsey {

// Bayesian phase distribution represented by its Fourier coefficients,
//
//   P(phi) = sum_w b_w exp(i w phi),   b_{-w} = conj(b_w),
//
// with only w = 0..max_index stored. The stored coefficients are kept
// normalized (2*pi*b_0 = 1) after every update; the accumulated
// renormalization factor lives in log_weight(), so that
// exp(log_weight) * 2*pi*b_0 is the joint probability of the outcome
// sequence applied so far (starting from the uniform prior).
//
// A detection at stage k couples coefficients 2^k apart, so after any
// sequence of detections the nonzero coefficients lie on a lattice
// w = 0, s, 2s, ... ; the class tracks that stride and never touches the
// structurally-zero entries (they stay exactly 0.0).
class FourierPosterior {
public:
    // Uniform prior on (-pi, pi]: b_0 = 1/(2*pi), everything else zero.
    explicit FourierPosterior(std::size_t max_index);

    // Back to the uniform prior without reallocating.
    void reset();

    // One detection: outcome u in {+1,-1}, control phase theta, stage k,
    // decayed visibility v in [0,1]. Applies
    //   b_w <- b_w/2 + (u v / 4) (b_{w-2^k} e^{-i theta} + b_{w+2^k} e^{i theta})
    // (indices beyond max_index are zero, negative indices via conjugation)
    // and renormalizes. Throws if 2^k exceeds max_index.
    void update(int outcome, double theta, int stage, double visibility);

    std::size_t max_index() const { return coeffs_.size() - 1; }

    // Current sparsity stride; 0 means only b_0 is (possibly) nonzero.
    std::size_t stride() const { return stride_; }

    double log_weight() const { return log_weight_; }

    // Normalized coefficient b_w / (2*pi*b_0); conjugated for w < 0, zero
    // beyond the stored range.
    std::complex<double> coefficient(long long w) const;

    // Joint probability of the outcome sequence so far:
    // exp(log_weight) * 2*pi*b_0.
    double normalization() const;

    // arg(b_{-1}) in (-pi, pi]; 0 by convention when b_1 is zero or
    // indistinguishable from roundoff (|b_1| <= 1e-12 b_0), where its
    // argument would be noise.
    double phase_estimate() const;

    // arg(b_{-2^k}): estimate of 2^k * phi (modulo 2*pi), with the same
    // zero convention as phase_estimate. Throws if 2^k exceeds max_index.
    double scaled_phase_estimate(int stage) const;

    // |b_1| / b_0 in [0, 1].
    double sharpness() const;

    // Normalized density P(phi | outcomes); real by construction up to
    // roundoff (the imaginary parts cancel in the conjugate pairing).
    double density(double phi) const;

private:
    std::vector<std::complex<double>> coeffs_;
    std::vector<std::complex<double>> snapshot_;  // scratch for update()
    std::size_t stride_;
    double log_weight_;
};

// V_H = S^-2 - 1; infinity when the sharpness S is zero.
double holevo_variance(double sharpness);

}  // namespace ramsey

#endif  // RAMSEY_POSTERIOR_HPP_
