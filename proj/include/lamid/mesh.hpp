#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lamid/laminate.hpp"

namespace lamid {

/// Structured quadrilateral mesh of the laminate cross-section.
///
/// Nodes are numbered column-by-column (the through-thickness index runs
/// fastest) to keep the assembled matrices tightly banded. Each node carries
/// two DOFs, (ux, uy) = (2*node, 2*node+1).
struct LaminateMesh {
    LaminateGeometry geometry;
    int nx = 0;            // elements along the length
    int ny_per_layer = 0;  // element rows per layer
    int ny = 0;            // total element rows
    Eigen::MatrixX2d nodes;                      // node -> (x, y)
    Eigen::Matrix<int, Eigen::Dynamic, 4> elements;  // element -> 4 node ids, CCW
    std::vector<int> element_layer;              // element -> layer index
    std::vector<int> constrained_dofs;           // ux on the left edge + right-center ux
    int sensor_node = -1;                        // top-surface node nearest sensor_position
    int sensor_dof = -1;                         // its uy DOF
    std::vector<int> actuated_dofs;              // uy of top-left and bottom-left nodes

    int node_count() const { return static_cast<int>(nodes.rows()); }
    int element_count() const { return static_cast<int>(elements.rows()); }
    int dof_count() const { return 2 * node_count(); }

    double element_dx() const { return geometry.length / nx; }

    /// Centroid x-coordinate of an element.
    double element_centroid_x(int e) const {
        double x = 0.0;
        for (int k = 0; k < 4; ++k) x += nodes(elements(e, k), 0);
        return 0.25 * x;
    }
};

/// Build the structured mesh, boundary-condition sets, sensor and actuator DOFs.
/// Left edge: ux fixed (symmetry). Right-edge center node: ux fixed.
LaminateMesh build_mesh(const LaminateGeometry& geometry, int nx, int ny_per_layer);

}  // namespace lamid
