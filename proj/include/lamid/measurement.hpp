#pragma once

#include <optional>

#include <Eigen/Dense>

#include "lamid/forward.hpp"
#include "lamid/laminate.hpp"

namespace lamid {

/// Noisy sensor observation plus the experiment bookkeeping that produced it.
/// The noise-free trace is retained for test oracles and filter diagnostics.
struct Measurement {
    Eigen::VectorXd values;       // observed trace, length m
    Eigen::VectorXd clean;        // noise-free trace at theta_true
    double dt = 0.0;
    double noise_sigma = 0.0;     // absolute sigma in meters
    double noise_level = 0.0;     // sigma as a fraction of u_d_max
    double u_d_max = 0.0;         // window max used to set sigma
    int window_start = 0;         // first step of the post-excitation window
    std::optional<DamageParams> truth;
    std::uint64_t seed = 0;

    int size() const { return static_cast<int>(values.size()); }
};

/// Run the forward model at theta_true and add i.i.d. Gaussian noise.
///
/// sigma = noise_level * u_d_max where u_d_max is the largest |displacement|
/// after the excitation packet: the window starts at
/// (1 + window_margin) * excitation duration.
Measurement synthesize_measurement(const DamageParams& theta_true, double noise_level,
                                   const ForwardModel& hifi, const ExcitationSignal& sig,
                                   std::uint64_t seed, double window_margin = 1.0);

/// Gaussian log-likelihood of a predicted trace against the measurement:
/// -1/2 sum((s - s_hat)^2) / sigma^2 - (m/2) log(2 pi sigma^2).
double log_likelihood(const Measurement& meas, const SensorTrace& predicted);

}  // namespace lamid
