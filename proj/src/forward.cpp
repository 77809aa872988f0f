#include "lamid/forward.hpp"

namespace lamid {

HiFiForward::HiFiForward(std::shared_ptr<const WaveguideModel> model, ExcitationSignal sig,
                         double dt, int steps)
    : model_(std::move(model)), sig_(std::move(sig)), dt_(dt), steps_(steps) {
    if (!model_) throw InvalidInputError("null waveguide model");
    sig_.validate();
}

SensorTrace HiFiForward::do_solve(const DamageParams& theta) const {
    const SystemMatrices sys = model_->assemble(theta);
    const Trajectory traj = newmark_solve(sys, sig_, dt_, steps_);
    return observe(traj, model_->mesh());
}

RomForward::RomForward(std::shared_ptr<const WaveguideModel> model,
                       std::shared_ptr<const ReducedBasis> basis, ExcitationSignal sig, double dt,
                       int steps)
    : model_(std::move(model)),
      basis_(std::move(basis)),
      sig_(std::move(sig)),
      dt_(dt),
      steps_(steps) {
    if (!model_ || !basis_) throw InvalidInputError("null model or basis");
    sig_.validate();
    const auto& phi = basis_->phi;
    if (phi.rows() != model_->mesh().dof_count())
        throw InvalidInputError("basis does not match the mesh DOF count");

    Eigen::MatrixXd mass_phi = model_->mass() * phi;
    mass_r_.noalias() = phi.transpose() * mass_phi;
    mass_r_ = 0.5 * (mass_r_ + mass_r_.transpose()).eval();

    Eigen::VectorXd pattern = Eigen::VectorXd::Zero(phi.rows());
    for (int d : sig_.actuated_dofs) pattern[d] = 1.0;
    force_map_ = phi.transpose() * pattern;
    sensor_row_ = phi.row(model_->mesh().sensor_dof);
}

SensorTrace RomForward::do_solve(const DamageParams& theta) const {
    const SystemMatrices sys = model_->assemble(theta);
    const auto& phi = basis_->phi;

    ReducedSystem rsys;
    rsys.mass_r = mass_r_;
    Eigen::MatrixXd kphi = sys.stiffness * phi;
    rsys.stiffness_r.noalias() = phi.transpose() * kphi;
    rsys.stiffness_r = 0.5 * (rsys.stiffness_r + rsys.stiffness_r.transpose()).eval();
    rsys.force_map = force_map_;
    rsys.sensor_row = sensor_row_;

    ReducedSolution sol = reduced_solve(rsys, sig_, dt_, steps_);
    sol.trace.sensor_dof = model_->mesh().sensor_dof;
    return sol.trace;
}

}  // namespace lamid
