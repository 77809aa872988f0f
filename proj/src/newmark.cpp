#include "lamid/newmark.hpp"

namespace lamid {

Trajectory newmark_solve(const SystemMatrices& sys, const ExcitationSignal& sig, double dt,
                         int steps) {
    return newmark_solve(sys, sig, dt, steps, Eigen::VectorXd::Zero(sys.size()),
                         Eigen::VectorXd::Zero(sys.size()));
}

Trajectory newmark_solve(const SystemMatrices& sys, const ExcitationSignal& sig, double dt,
                         int steps, const Eigen::VectorXd& u0, const Eigen::VectorXd& v0) {
    sig.validate();
    const Eigen::Index n = sys.size();
    if (u0.size() != n || v0.size() != n)
        throw InvalidInputError("initial state does not match system size");

    const Eigen::VectorXd g = burst_series(sig, dt, steps);
    Eigen::VectorXd pattern = Eigen::VectorXd::Zero(n);
    for (int d : sig.actuated_dofs) {
        if (d < 0 || d >= n) throw InvalidInputError("actuated DOF out of range");
        pattern[d] = 1.0;
    }
    Eigen::VectorXd f(n);
    auto force = [&](int j) -> const Eigen::VectorXd& {
        f = g[j] * pattern;
        return f;
    };
    return detail::newmark_march(sys.mass, sys.stiffness, force, dt, steps, u0, v0);
}

}  // namespace lamid
