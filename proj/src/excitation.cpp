#include "lamid/excitation.hpp"

#include <cmath>
#include <numbers>

namespace lamid {

double hanning_burst(double t, const ExcitationSignal& sig) {
    if (t < 0.0 || t > sig.duration()) return 0.0;
    const double w = 2.0 * std::numbers::pi * sig.center_frequency * t;
    const double window = 0.5 * (1.0 - std::cos(w / sig.cycle_count));
    return sig.amplitude * window * std::sin(w);
}

Eigen::VectorXd burst_series(const ExcitationSignal& sig, double dt, int steps) {
    Eigen::VectorXd g(steps);
    for (int j = 0; j < steps; ++j) g[j] = hanning_burst(j * dt, sig);
    return g;
}

}  // namespace lamid
