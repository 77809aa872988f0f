#pragma once

#include <memory>

#include <Eigen/Dense>

#include "lamid/assembly.hpp"
#include "lamid/excitation.hpp"
#include "lamid/observe.hpp"
#include "lamid/pod.hpp"

namespace lamid {

/// Galerkin projection of the assembled system onto a reduced basis.
struct ReducedSystem {
    Eigen::MatrixXd mass_r;       // n x n
    Eigen::MatrixXd stiffness_r;  // n x n
    Eigen::VectorXd force_map;    // phi^T applied to the unit actuation pattern
    Eigen::RowVectorXd sensor_row;  // B phi, 1 x n
    std::shared_ptr<const ReducedBasis> basis;

    int n() const { return static_cast<int>(mass_r.rows()); }
};

/// phi^T M phi and phi^T K phi with the sparse half-products kept for reuse.
struct ProjectedOperators {
    Eigen::MatrixXd mass_phi;       // M phi, N x n
    Eigen::MatrixXd stiffness_phi;  // K phi, N x n
    Eigen::MatrixXd mass_r;
    Eigen::MatrixXd stiffness_r;
};

ProjectedOperators project_operators(const SystemMatrices& sys, const ReducedBasis& basis);

/// Project the system; matrices are symmetrized after projection.
ReducedSystem reduce(const SystemMatrices& sys, std::shared_ptr<const ReducedBasis> basis);

/// Same, wiring the actuation pattern and sensor row for forward solves.
ReducedSystem reduce(const SystemMatrices& sys, std::shared_ptr<const ReducedBasis> basis,
                     const std::vector<int>& actuated_dofs, int sensor_dof);

struct ReducedSolution {
    Trajectory reduced;  // n x steps coefficient history
    SensorTrace trace;   // (B phi) u_r without lifting the full field
};

/// Newmark march on the reduced system.
ReducedSolution reduced_solve(const ReducedSystem& rsys, const ExcitationSignal& sig, double dt,
                              int steps);

/// Max over sampled steps of || M phi u_r'' + K phi u_r - f(t) ||_2.
/// Sampling stride defaults to every 10th step.
double residual_indicator(const ReducedSystem& rsys, const SystemMatrices& sys,
                          const Trajectory& reduced_traj, const ExcitationSignal& sig,
                          int stride = 10);

/// Variant reusing precomputed half-products (training inner loop).
double residual_indicator(const ProjectedOperators& ops, const Trajectory& reduced_traj,
                          const ExcitationSignal& sig, const std::vector<int>& actuated_dofs,
                          Eigen::Index full_dim, int stride = 10);

}  // namespace lamid
