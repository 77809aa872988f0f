#include "lamid/reduced.hpp"

namespace lamid {

ProjectedOperators project_operators(const SystemMatrices& sys, const ReducedBasis& basis) {
    if (basis.phi.rows() != sys.size())
        throw InvalidInputError("basis rows do not match system dimension");
    ProjectedOperators ops;
    ops.mass_phi.noalias() = sys.mass * basis.phi;
    ops.stiffness_phi.noalias() = sys.stiffness * basis.phi;
    ops.mass_r.noalias() = basis.phi.transpose() * ops.mass_phi;
    ops.stiffness_r.noalias() = basis.phi.transpose() * ops.stiffness_phi;
    ops.mass_r = 0.5 * (ops.mass_r + ops.mass_r.transpose()).eval();
    ops.stiffness_r = 0.5 * (ops.stiffness_r + ops.stiffness_r.transpose()).eval();
    return ops;
}

ReducedSystem reduce(const SystemMatrices& sys, std::shared_ptr<const ReducedBasis> basis) {
    if (!basis) throw InvalidInputError("null basis");
    auto ops = project_operators(sys, *basis);
    ReducedSystem rsys;
    rsys.mass_r = std::move(ops.mass_r);
    rsys.stiffness_r = std::move(ops.stiffness_r);
    rsys.basis = std::move(basis);
    return rsys;
}

ReducedSystem reduce(const SystemMatrices& sys, std::shared_ptr<const ReducedBasis> basis,
                     const std::vector<int>& actuated_dofs, int sensor_dof) {
    ReducedSystem rsys = reduce(sys, std::move(basis));
    const auto& phi = rsys.basis->phi;
    Eigen::VectorXd pattern = Eigen::VectorXd::Zero(phi.rows());
    for (int d : actuated_dofs) {
        if (d < 0 || d >= phi.rows()) throw InvalidInputError("actuated DOF out of range");
        pattern[d] = 1.0;
    }
    rsys.force_map = phi.transpose() * pattern;
    if (sensor_dof < 0 || sensor_dof >= phi.rows())
        throw InvalidInputError("sensor DOF out of range");
    rsys.sensor_row = phi.row(sensor_dof);
    return rsys;
}

ReducedSolution reduced_solve(const ReducedSystem& rsys, const ExcitationSignal& sig, double dt,
                              int steps) {
    sig.validate();
    if (rsys.force_map.size() != rsys.n())
        throw InvalidInputError("reduced system lacks a force map; use the wiring reduce()");

    const Eigen::VectorXd g = burst_series(sig, dt, steps);
    Eigen::VectorXd f(rsys.n());
    auto force = [&](int j) -> const Eigen::VectorXd& {
        f = g[j] * rsys.force_map;
        return f;
    };
    ReducedSolution sol;
    sol.reduced = detail::newmark_march(rsys.mass_r, rsys.stiffness_r, force, dt, steps,
                                        Eigen::VectorXd::Zero(rsys.n()),
                                        Eigen::VectorXd::Zero(rsys.n()));
    sol.trace.dt = dt;
    sol.trace.sensor_dof = -1;
    if (rsys.sensor_row.size() == rsys.n())
        sol.trace.values = (rsys.sensor_row * sol.reduced.displacements).transpose();
    return sol;
}

double residual_indicator(const ProjectedOperators& ops, const Trajectory& reduced_traj,
                          const ExcitationSignal& sig, const std::vector<int>& actuated_dofs,
                          Eigen::Index full_dim, int stride) {
    if (stride < 1) throw InvalidInputError("residual stride must be >= 1");
    if (ops.mass_phi.cols() != reduced_traj.displacements.rows())
        throw InvalidInputError("reduced trajectory does not match projected operators");

    Eigen::VectorXd pattern = Eigen::VectorXd::Zero(full_dim);
    for (int d : actuated_dofs) pattern[d] = 1.0;

    double worst = 0.0;
    Eigen::VectorXd r(full_dim);
    for (int j = 0; j < reduced_traj.steps; j += stride) {
        r.noalias() = ops.mass_phi * reduced_traj.accelerations.col(j);
        r.noalias() += ops.stiffness_phi * reduced_traj.displacements.col(j);
        r -= hanning_burst(j * reduced_traj.dt, sig) * pattern;
        worst = std::max(worst, r.norm());
    }
    return worst;
}

double residual_indicator(const ReducedSystem& rsys, const SystemMatrices& sys,
                          const Trajectory& reduced_traj, const ExcitationSignal& sig,
                          int stride) {
    if (!rsys.basis) throw InvalidInputError("reduced system lacks its basis");
    auto ops = project_operators(sys, *rsys.basis);
    return residual_indicator(ops, reduced_traj, sig, sig.actuated_dofs, sys.size(), stride);
}

}  // namespace lamid
