#include "lamid/measurement.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace lamid {

Measurement synthesize_measurement(const DamageParams& theta_true, double noise_level,
                                   const ForwardModel& hifi, const ExcitationSignal& sig,
                                   std::uint64_t seed, double window_margin) {
    if (noise_level <= 0.0 || noise_level > 0.5)
        throw InvalidInputError("noise level must lie in (0, 0.5]");

    const SensorTrace trace = hifi.solve(theta_true);
    const int m = trace.size();
    const int start = static_cast<int>(std::ceil((1.0 + window_margin) * sig.duration() /
                                                 trace.dt));
    if (start >= m)
        throw DegenerateSignalError("post-excitation window is empty at this horizon");

    double u_d_max = 0.0;
    for (int j = start; j < m; ++j) u_d_max = std::max(u_d_max, std::abs(trace.values[j]));
    if (u_d_max == 0.0)
        throw DegenerateSignalError("no signal after the excitation packet");

    Measurement meas;
    meas.clean = trace.values;
    meas.dt = trace.dt;
    meas.noise_level = noise_level;
    meas.u_d_max = u_d_max;
    meas.noise_sigma = noise_level * u_d_max;
    meas.window_start = start;
    meas.truth = theta_true;
    meas.seed = seed;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, meas.noise_sigma);
    meas.values = meas.clean;
    for (int j = 0; j < m; ++j) meas.values[j] += gauss(rng);
    return meas;
}

double log_likelihood(const Measurement& meas, const SensorTrace& predicted) {
    if (meas.noise_sigma <= 0.0) throw InvalidNoiseError("noise sigma must be positive");
    if (predicted.size() != meas.size())
        throw InvalidInputError("measurement and prediction lengths differ");
    const double s2 = meas.noise_sigma * meas.noise_sigma;
    const double quad = (meas.values - predicted.values).squaredNorm() / s2;
    const double m = static_cast<double>(meas.size());
    return -0.5 * quad - 0.5 * m * std::log(2.0 * std::numbers::pi * s2);
}

}  // namespace lamid
