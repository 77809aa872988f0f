#pragma once

#include <Eigen/Dense>

#include "lamid/mesh.hpp"
#include "lamid/newmark.hpp"

namespace lamid {

/// Out-of-plane displacement recorded at the sensor DOF, one sample per step.
struct SensorTrace {
    double dt = 0.0;
    Eigen::VectorXd values;
    int sensor_dof = -1;

    int size() const { return static_cast<int>(values.size()); }
};

/// Apply the single-row observation operator: pick the sensor's uy history.
SensorTrace observe(const Trajectory& traj, const LaminateMesh& mesh);

/// Relative L2 distance between two traces of equal length.
double trace_relative_error(const SensorTrace& reference, const SensorTrace& other);

}  // namespace lamid
