#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "lamid/laminate.hpp"
#include "lamid/mesh.hpp"

namespace lamid {

using SparseMat = Eigen::SparseMatrix<double>;

/// Assembled mass and stiffness with constraints already applied.
///
/// Constrained DOFs are eliminated in place: their rows and columns are
/// zeroed, the mass diagonal gets a unit entry so M stays SPD, and the
/// stiffness diagonal stays zero. The decoupled equations keep the DOF at
/// its zero initial value, so matrix dimensions remain the full dof_count.
struct SystemMatrices {
    SparseMat mass;
    SparseMat stiffness;
    std::vector<int> constrained_dofs;

    Eigen::Index size() const { return mass.rows(); }
};

namespace detail {

/// Plane-strain stiffness of a 4-node bilinear quad, 2x2 Gauss, symmetrized.
Eigen::Matrix<double, 8, 8> quad_stiffness(const Eigen::Matrix<double, 4, 2>& coords, double E,
                                          double nu);

/// Consistent mass of the same element.
Eigen::Matrix<double, 8, 8> quad_mass(const Eigen::Matrix<double, 4, 2>& coords, double rho);

}  // namespace detail

/// Parameterized assembly of the waveguide system.
///
/// The undamaged stiffness, the mass, and the unit-modulus stiffness of every
/// element in the damaged layer are built once; assemble(theta) then swaps the
/// modulus of the covered elements. The result is identical to a from-scratch
/// assembly with the damaged moduli.
class WaveguideModel {
public:
    WaveguideModel(LaminateMesh mesh, ParametricDomain domain);

    const LaminateMesh& mesh() const { return mesh_; }
    const ParametricDomain& domain() const { return domain_; }

    /// Elements of the damaged layer whose centroid falls in [x_d - l_d/2, x_d + l_d/2].
    std::vector<int> damaged_elements(const DamageParams& theta) const;

    /// Full assembly at theta. Throws OutOfDomainError / DegenerateDamageError.
    SystemMatrices assemble(const DamageParams& theta) const;

    /// Mass matrix (independent of theta).
    const SparseMat& mass() const { return mass_; }

private:
    LaminateMesh mesh_;
    ParametricDomain domain_;
    SparseMat mass_;
    SparseMat stiffness_base_;
    std::vector<int> damaged_layer_elements_;          // element ids, ascending centroid x
    std::vector<double> damaged_layer_centroid_x_;
    std::vector<Eigen::Matrix<double, 8, 8>> unit_stiffness_;  // per damaged-layer element, E = 1
    void apply_constraints(SparseMat& m, bool unit_diagonal) const;
};

/// One-shot assembly per the module contract. Builds a WaveguideModel internally;
/// prefer holding a WaveguideModel when assembling many parameter values.
SystemMatrices assemble_system(const LaminateMesh& mesh, const ParametricDomain& domain,
                               const DamageParams& theta);

}  // namespace lamid
