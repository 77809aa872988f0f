#pragma once

#include <vector>

#include <Eigen/Dense>

#include "lamid/errors.hpp"

namespace lamid {

/// Hanning-windowed sinusoidal burst applied at the actuator DOFs.
struct ExcitationSignal {
    double center_frequency = 120.0e3;  // Hz
    int cycle_count = 5;
    double amplitude = 1.0;             // N
    std::vector<int> actuated_dofs;

    double duration() const { return cycle_count / center_frequency; }

    void validate() const {
        if (center_frequency <= 0.0) throw InvalidInputError("center frequency must be positive");
        if (cycle_count < 1) throw InvalidInputError("cycle count must be at least 1");
    }
};

/// Burst amplitude at time t: A * 0.5*(1 - cos(2*pi*f*t/n)) * sin(2*pi*f*t)
/// inside [0, duration], zero outside. Total in t.
double hanning_burst(double t, const ExcitationSignal& sig);

/// Burst samples at t = 0, dt, ..., (steps-1)*dt.
Eigen::VectorXd burst_series(const ExcitationSignal& sig, double dt, int steps);

}  // namespace lamid
