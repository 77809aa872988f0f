#include "lamid/pod.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace lamid {

SnapshotMatrix collect_snapshots(const std::vector<Trajectory>& trajectories,
                                 const std::vector<DamageParams>& params, int stride) {
    if (trajectories.empty()) throw InvalidInputError("no trajectories to collect");
    if (params.size() != trajectories.size())
        throw InvalidInputError("one parameter value per trajectory required");
    if (stride < 1) throw InvalidInputError("snapshot stride must be >= 1");

    const Eigen::Index n = trajectories.front().displacements.rows();
    const double dt = trajectories.front().dt;
    Eigen::Index total = 0;
    for (const auto& t : trajectories) {
        if (t.displacements.rows() != n || t.dt != dt)
            throw InvalidInputError("trajectories disagree in DOF count or time step");
        total += (t.steps + stride - 1) / stride;
    }

    SnapshotMatrix s;
    s.data.resize(n, total);
    s.source_params = params;
    Eigen::Index c = 0;
    for (const auto& t : trajectories)
        for (int j = 0; j < t.steps; j += stride) s.data.col(c++) = t.displacements.col(j);
    return s;
}

namespace {

int truncation_count(const Eigen::VectorXd& sigma, const PodTruncation& rule, int rank) {
    int n;
    if (rule.fixed_n > 0) {
        n = std::min(rule.fixed_n, rank);
    } else {
        const double total = sigma.squaredNorm();
        double tail = total;
        n = rank;
        for (int k = 0; k < rank; ++k) {
            tail -= sigma[k] * sigma[k];
            if (tail <= rule.energy_tol * total) {
                n = k + 1;
                break;
            }
        }
    }
    if (rule.n_max > 0) n = std::min(n, rule.n_max);
    return std::max(n, 1);
}

}  // namespace

ReducedBasis pod_basis(const SnapshotMatrix& snapshots, const PodTruncation& rule) {
    const auto& S = snapshots.data;
    if (S.size() == 0) throw InvalidInputError("empty snapshot matrix");
    if (S.cwiseAbs().maxCoeff() == 0.0)
        throw DegenerateSnapshotError("snapshot matrix is identically zero");

    const Eigen::Index rows = S.rows();
    const Eigen::Index cols = S.cols();
    ReducedBasis basis;

    // Direct thin SVD when affordable; otherwise the Gram (method-of-snapshots)
    // route with a final re-orthonormalization of the retained modes.
    const bool direct = std::min(rows, cols) <= 512 && rows * cols <= Eigen::Index(16'000'000);
    if (direct) {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(S, Eigen::ComputeThinU);
        const Eigen::VectorXd sigma = svd.singularValues();
        int rank = 0;
        const double cut = sigma[0] * 1e-14;
        while (rank < sigma.size() && sigma[rank] > cut) ++rank;
        const int n = truncation_count(sigma, rule, std::max(rank, 1));
        basis.phi = svd.matrixU().leftCols(n);
        basis.singular_values = sigma;
        basis.n = n;
    } else {
        Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(cols, cols);
        gram.selfadjointView<Eigen::Lower>().rankUpdate(S.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
        if (eig.info() != Eigen::Success)
            throw SingularSystemError("Gram eigendecomposition failed");
        // Ascending eigenvalues; flip to descending singular values.
        Eigen::VectorXd sigma(cols);
        for (Eigen::Index k = 0; k < cols; ++k)
            sigma[k] = std::sqrt(std::max(eig.eigenvalues()[cols - 1 - k], 0.0));
        int rank = 0;
        const double cut = sigma[0] * 1e-7;  // Gram route halves the usable digits
        while (rank < sigma.size() && sigma[rank] > cut) ++rank;
        const int n = truncation_count(sigma, rule, std::max(rank, 1));

        Eigen::MatrixXd weights(cols, n);
        for (int k = 0; k < n; ++k)
            weights.col(k) = eig.eigenvectors().col(cols - 1 - k) / sigma[k];
        Eigen::MatrixXd modes = S * weights;
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(modes);
        basis.phi = qr.householderQ() * Eigen::MatrixXd::Identity(rows, n);
        basis.singular_values = sigma;
        basis.n = n;
    }
    return basis;
}

}  // namespace lamid
