#include "lamid/assembly.hpp"

#include <algorithm>
#include <cmath>

namespace lamid {
namespace detail {

namespace {

struct GaussPoint {
    double xi, eta, w;
};

constexpr double kG = 0.57735026918962576451;  // 1/sqrt(3)

const GaussPoint kGauss2x2[4] = {
    {-kG, -kG, 1.0}, {kG, -kG, 1.0}, {kG, kG, 1.0}, {-kG, kG, 1.0}};

void shape_derivatives(double xi, double eta, Eigen::Matrix<double, 4, 2>& dN) {
    dN(0, 0) = -0.25 * (1.0 - eta);
    dN(1, 0) = 0.25 * (1.0 - eta);
    dN(2, 0) = 0.25 * (1.0 + eta);
    dN(3, 0) = -0.25 * (1.0 + eta);
    dN(0, 1) = -0.25 * (1.0 - xi);
    dN(1, 1) = -0.25 * (1.0 + xi);
    dN(2, 1) = 0.25 * (1.0 + xi);
    dN(3, 1) = 0.25 * (1.0 - xi);
}

void shape_values(double xi, double eta, Eigen::Vector4d& N) {
    N[0] = 0.25 * (1.0 - xi) * (1.0 - eta);
    N[1] = 0.25 * (1.0 + xi) * (1.0 - eta);
    N[2] = 0.25 * (1.0 + xi) * (1.0 + eta);
    N[3] = 0.25 * (1.0 - xi) * (1.0 + eta);
}

}  // namespace

Eigen::Matrix<double, 8, 8> quad_stiffness(const Eigen::Matrix<double, 4, 2>& coords, double E,
                                          double nu) {
    Eigen::Matrix3d D;
    const double c = E / ((1.0 + nu) * (1.0 - 2.0 * nu));
    D << c * (1.0 - nu), c * nu, 0.0,
         c * nu, c * (1.0 - nu), 0.0,
         0.0, 0.0, c * (1.0 - 2.0 * nu) / 2.0;

    Eigen::Matrix<double, 8, 8> ke = Eigen::Matrix<double, 8, 8>::Zero();
    Eigen::Matrix<double, 4, 2> dN, dNx;
    for (const auto& gp : kGauss2x2) {
        shape_derivatives(gp.xi, gp.eta, dN);
        const Eigen::Matrix2d J = coords.transpose() * dN;
        const double detJ = J.determinant();
        if (detJ <= 0.0) throw InvalidGeometryError("inverted element (non-positive Jacobian)");
        dNx = dN * J.inverse();

        Eigen::Matrix<double, 3, 8> B = Eigen::Matrix<double, 3, 8>::Zero();
        for (int i = 0; i < 4; ++i) {
            B(0, 2 * i) = dNx(i, 0);
            B(1, 2 * i + 1) = dNx(i, 1);
            B(2, 2 * i) = dNx(i, 1);
            B(2, 2 * i + 1) = dNx(i, 0);
        }
        ke.noalias() += (B.transpose() * D * B) * (detJ * gp.w);
    }
    ke = (0.5 * (ke + ke.transpose())).eval();
    return ke;
}

Eigen::Matrix<double, 8, 8> quad_mass(const Eigen::Matrix<double, 4, 2>& coords, double rho) {
    Eigen::Matrix<double, 8, 8> me = Eigen::Matrix<double, 8, 8>::Zero();
    Eigen::Matrix<double, 4, 2> dN;
    Eigen::Vector4d N;
    for (const auto& gp : kGauss2x2) {
        shape_derivatives(gp.xi, gp.eta, dN);
        shape_values(gp.xi, gp.eta, N);
        const Eigen::Matrix2d J = coords.transpose() * dN;
        const double detJ = J.determinant();
        if (detJ <= 0.0) throw InvalidGeometryError("inverted element (non-positive Jacobian)");
        const double s = rho * detJ * gp.w;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const double v = s * N[i] * N[j];
                me(2 * i, 2 * j) += v;
                me(2 * i + 1, 2 * j + 1) += v;
            }
    }
    me = (0.5 * (me + me.transpose())).eval();
    return me;
}

}  // namespace detail

namespace {

Eigen::Matrix<double, 4, 2> element_coords(const LaminateMesh& mesh, int e) {
    Eigen::Matrix<double, 4, 2> c;
    for (int k = 0; k < 4; ++k) c.row(k) = mesh.nodes.row(mesh.elements(e, k));
    return c;
}

}  // namespace

WaveguideModel::WaveguideModel(LaminateMesh mesh, ParametricDomain domain)
    : mesh_(std::move(mesh)), domain_(std::move(domain)) {
    domain_.validate();
    const int n = mesh_.dof_count();
    std::vector<char> fixed(n, 0);
    for (int d : mesh_.constrained_dofs) fixed[d] = 1;

    std::vector<Eigen::Triplet<double>> kt, mt;
    kt.reserve(static_cast<size_t>(mesh_.element_count()) * 64);
    mt.reserve(static_cast<size_t>(mesh_.element_count()) * 64);

    const int damaged_layer = mesh_.geometry.damaged_layer_index;
    for (int e = 0; e < mesh_.element_count(); ++e) {
        const auto coords = element_coords(mesh_, e);
        const auto& layer = mesh_.geometry.layers[mesh_.element_layer[e]];
        const auto ke = detail::quad_stiffness(coords, layer.youngs_modulus, layer.poisson_ratio);
        const auto me = detail::quad_mass(coords, layer.density);
        if (mesh_.element_layer[e] == damaged_layer) {
            damaged_layer_elements_.push_back(e);
            damaged_layer_centroid_x_.push_back(mesh_.element_centroid_x(e));
            unit_stiffness_.push_back(detail::quad_stiffness(coords, 1.0, layer.poisson_ratio));
        }
        int gdof[8];
        for (int k = 0; k < 4; ++k) {
            gdof[2 * k] = 2 * mesh_.elements(e, k);
            gdof[2 * k + 1] = 2 * mesh_.elements(e, k) + 1;
        }
        for (int i = 0; i < 8; ++i) {
            if (fixed[gdof[i]]) continue;
            for (int j = 0; j < 8; ++j) {
                if (fixed[gdof[j]]) continue;
                kt.emplace_back(gdof[i], gdof[j], ke(i, j));
                mt.emplace_back(gdof[i], gdof[j], me(i, j));
            }
        }
    }
    for (int d = 0; d < n; ++d)
        if (fixed[d]) mt.emplace_back(d, d, 1.0);

    stiffness_base_.resize(n, n);
    stiffness_base_.setFromTriplets(kt.begin(), kt.end());
    stiffness_base_.makeCompressed();
    mass_.resize(n, n);
    mass_.setFromTriplets(mt.begin(), mt.end());
    mass_.makeCompressed();

    // Keep damaged-layer bookkeeping sorted by centroid x for range queries.
    std::vector<int> order(damaged_layer_elements_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return damaged_layer_centroid_x_[a] < damaged_layer_centroid_x_[b];
    });
    auto reorder = [&order](auto& v) {
        auto copy = v;
        for (size_t i = 0; i < order.size(); ++i) v[i] = copy[order[i]];
    };
    reorder(damaged_layer_elements_);
    reorder(damaged_layer_centroid_x_);
    reorder(unit_stiffness_);
}

std::vector<int> WaveguideModel::damaged_elements(const DamageParams& theta) const {
    const double lo = theta.zone_begin();
    const double hi = theta.zone_end();
    auto begin = std::lower_bound(damaged_layer_centroid_x_.begin(),
                                  damaged_layer_centroid_x_.end(), lo);
    auto end = std::upper_bound(damaged_layer_centroid_x_.begin(),
                                damaged_layer_centroid_x_.end(), hi);
    std::vector<int> out;
    for (auto it = begin; it != end; ++it)
        out.push_back(damaged_layer_elements_[it - damaged_layer_centroid_x_.begin()]);
    return out;
}

SystemMatrices WaveguideModel::assemble(const DamageParams& theta) const {
    if (!domain_.contains(theta))
        throw OutOfDomainError("damage parameters outside the trained domain");
    if (theta.zone_begin() < 0.0 || theta.zone_end() > mesh_.geometry.length)
        throw OutOfDomainError("damage zone extends outside the laminate");

    const double lo = theta.zone_begin();
    const double hi = theta.zone_end();
    const auto& layer = mesh_.geometry.layers[mesh_.geometry.damaged_layer_index];
    const double delta_e = theta.youngs_modulus - layer.youngs_modulus;

    SystemMatrices sys;
    sys.mass = mass_;
    sys.stiffness = stiffness_base_;
    sys.constrained_dofs = mesh_.constrained_dofs;

    std::vector<char> fixed(mesh_.dof_count(), 0);
    for (int d : mesh_.constrained_dofs) fixed[d] = 1;

    bool any = false;
    for (size_t idx = 0; idx < damaged_layer_elements_.size(); ++idx) {
        const double cx = damaged_layer_centroid_x_[idx];
        if (cx < lo || cx > hi) continue;
        any = true;
        if (delta_e == 0.0) continue;
        const int e = damaged_layer_elements_[idx];
        int gdof[8];
        for (int k = 0; k < 4; ++k) {
            gdof[2 * k] = 2 * mesh_.elements(e, k);
            gdof[2 * k + 1] = 2 * mesh_.elements(e, k) + 1;
        }
        const auto& ku = unit_stiffness_[idx];
        for (int i = 0; i < 8; ++i) {
            if (fixed[gdof[i]]) continue;
            for (int j = 0; j < 8; ++j) {
                if (fixed[gdof[j]]) continue;
                sys.stiffness.coeffRef(gdof[i], gdof[j]) += delta_e * ku(i, j);
            }
        }
    }
    if (!any)
        throw DegenerateDamageError("damage zone covers no element centroid of the damaged layer");
    return sys;
}

SystemMatrices assemble_system(const LaminateMesh& mesh, const ParametricDomain& domain,
                               const DamageParams& theta) {
    return WaveguideModel(mesh, domain).assemble(theta);
}

}  // namespace lamid
