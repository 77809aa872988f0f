#include "lamid/observe.hpp"

namespace lamid {

SensorTrace observe(const Trajectory& traj, const LaminateMesh& mesh) {
    if (traj.steps == 0 || traj.displacements.size() == 0)
        throw InvalidInputError("cannot observe an empty trajectory");
    if (mesh.sensor_dof < 0 || mesh.sensor_dof >= traj.displacements.rows())
        throw InvalidInputError("sensor DOF not present in the trajectory");
    SensorTrace trace;
    trace.dt = traj.dt;
    trace.sensor_dof = mesh.sensor_dof;
    trace.values = traj.displacements.row(mesh.sensor_dof).transpose();
    return trace;
}

double trace_relative_error(const SensorTrace& reference, const SensorTrace& other) {
    if (reference.size() != other.size())
        throw InvalidInputError("trace lengths differ");
    const double denom = reference.values.norm();
    if (denom == 0.0) return other.values.norm() == 0.0 ? 0.0 : 1.0;
    return (other.values - reference.values).norm() / denom;
}

}  // namespace lamid
