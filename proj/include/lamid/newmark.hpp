#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "lamid/assembly.hpp"
#include "lamid/excitation.hpp"

namespace lamid {

/// Displacement and acceleration histories, one column per time step.
/// Column j corresponds to t = j*dt; column 0 holds the initial condition.
struct Trajectory {
    double dt = 0.0;
    int steps = 0;
    Eigen::MatrixXd displacements;  // N x steps
    Eigen::MatrixXd accelerations;  // N x steps
};

namespace detail {

template <class Mat>
struct NewmarkSolver;

template <>
struct NewmarkSolver<SparseMat> {
    Eigen::SimplicialLDLT<SparseMat> fact;
    void factor(const SparseMat& A) {
        fact.compute(A);
        if (fact.info() != Eigen::Success)
            throw SingularSystemError("effective Newmark matrix failed to factorize");
    }
    Eigen::VectorXd solve(const Eigen::VectorXd& b) const { return fact.solve(b); }
};

template <>
struct NewmarkSolver<Eigen::MatrixXd> {
    Eigen::LDLT<Eigen::MatrixXd> fact;
    void factor(const Eigen::MatrixXd& A) {
        fact.compute(A);
        if (fact.info() != Eigen::Success || !fact.isPositive())
            throw SingularSystemError("effective Newmark matrix failed to factorize");
    }
    Eigen::VectorXd solve(const Eigen::VectorXd& b) const { return fact.solve(b); }
};

/// Average-acceleration Newmark march (beta = 1/4, gamma = 1/2).
/// force(j) must return the load vector at t = j*dt.
template <class Mat, class ForceFn>
Trajectory newmark_march(const Mat& M, const Mat& K, ForceFn&& force, double dt, int steps,
                         const Eigen::VectorXd& u0, const Eigen::VectorXd& v0) {
    if (dt <= 0.0) throw InvalidInputError("time step must be positive");
    if (steps < 1) throw InvalidInputError("need at least one time step");
    constexpr double beta = 0.25;
    constexpr double gamma = 0.5;

    const Eigen::Index n = M.rows();
    Trajectory traj;
    traj.dt = dt;
    traj.steps = steps;
    traj.displacements.setZero(n, steps);
    traj.accelerations.setZero(n, steps);

    NewmarkSolver<Mat> lhs;
    Mat A = M + (beta * dt * dt) * K;
    lhs.factor(A);

    NewmarkSolver<Mat> mass_solver;
    mass_solver.factor(M);

    Eigen::VectorXd u = u0, v = v0;
    Eigen::VectorXd a = mass_solver.solve(force(0) - K * u0);
    traj.displacements.col(0) = u;
    traj.accelerations.col(0) = a;

    Eigen::VectorXd u_pred(n), v_pred(n);
    for (int j = 1; j < steps; ++j) {
        u_pred = u + dt * v + (dt * dt * (0.5 - beta)) * a;
        v_pred = v + (dt * (1.0 - gamma)) * a;
        a = lhs.solve(force(j) - K * u_pred);
        u = u_pred + (beta * dt * dt) * a;
        v = v_pred + (gamma * dt) * a;
        traj.displacements.col(j) = u;
        traj.accelerations.col(j) = a;
    }
    return traj;
}

}  // namespace detail

/// Integrate M u'' + K u = f(t) from homogeneous initial conditions with the
/// excitation applied at sig.actuated_dofs.
Trajectory newmark_solve(const SystemMatrices& sys, const ExcitationSignal& sig, double dt,
                         int steps);

/// Same, with caller-supplied initial state (used by the energy checks).
Trajectory newmark_solve(const SystemMatrices& sys, const ExcitationSignal& sig, double dt,
                         int steps, const Eigen::VectorXd& u0, const Eigen::VectorXd& v0);

}  // namespace lamid
