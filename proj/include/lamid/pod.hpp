#pragma once

#include <vector>

#include <Eigen/Dense>

#include "lamid/laminate.hpp"
#include "lamid/newmark.hpp"

namespace lamid {

/// Horizontal stack of displacement columns together with the parameter
/// values whose solves contributed them.
struct SnapshotMatrix {
    Eigen::MatrixXd data;  // N x columns
    std::vector<DamageParams> source_params;

    Eigen::Index rows() const { return data.rows(); }
    Eigen::Index cols() const { return data.cols(); }
};

/// Concatenate displacement histories. With stride > 1 every stride-th column
/// is kept (training-time thinning); stride 1 keeps everything.
SnapshotMatrix collect_snapshots(const std::vector<Trajectory>& trajectories,
                                 const std::vector<DamageParams>& params, int stride = 1);

/// Orthonormal reduced basis with the singular spectrum it was cut from.
struct ReducedBasis {
    Eigen::MatrixXd phi;              // N x n, orthonormal columns
    Eigen::VectorXd singular_values;  // descending, full spectrum
    int n = 0;

    double orthonormality_error() const {
        if (n == 0) return 0.0;
        Eigen::MatrixXd g = phi.transpose() * phi;
        g.diagonal().array() -= 1.0;
        return g.cwiseAbs().maxCoeff();
    }
};

/// Basis truncation rule: keep a fixed count, or the smallest count whose
/// discarded tail energy (sum of squared singular values) stays within tol.
struct PodTruncation {
    int fixed_n = -1;          // > 0 selects fixed-size truncation
    double energy_tol = 1e-8;  // used when fixed_n <= 0
    int n_max = -1;            // optional cap on the retained count

    static PodTruncation fixed(int n) { return {n, 0.0, -1}; }
    static PodTruncation energy(double tol, int cap = -1) { return {-1, tol, cap}; }
};

/// Thin SVD of the snapshot matrix, truncated per the rule.
ReducedBasis pod_basis(const SnapshotMatrix& snapshots, const PodTruncation& rule);

}  // namespace lamid
