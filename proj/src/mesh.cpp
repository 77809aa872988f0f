#include "lamid/mesh.hpp"

#include <cmath>
#include <limits>

namespace lamid {

LaminateMesh build_mesh(const LaminateGeometry& geometry, int nx, int ny_per_layer) {
    geometry.validate();
    if (nx < 2) throw InvalidGeometryError("nx must be at least 2");
    if (ny_per_layer < 1) throw InvalidGeometryError("ny_per_layer must be at least 1");

    LaminateMesh mesh;
    mesh.geometry = geometry;
    mesh.nx = nx;
    mesh.ny_per_layer = ny_per_layer;
    const int n_layers = static_cast<int>(geometry.layers.size());
    mesh.ny = n_layers * ny_per_layer;

    // Row y-coordinates: ny_per_layer equal subdivisions inside each layer.
    std::vector<double> row_y(mesh.ny + 1);
    row_y[0] = 0.0;
    int r = 0;
    for (int l = 0; l < n_layers; ++l) {
        const double dy = geometry.layers[l].thickness / ny_per_layer;
        for (int k = 0; k < ny_per_layer; ++k, ++r) row_y[r + 1] = row_y[r] + dy;
    }

    const int nodes_per_column = mesh.ny + 1;
    const int n_nodes = (nx + 1) * nodes_per_column;
    mesh.nodes.resize(n_nodes, 2);
    const double dx = geometry.length / nx;
    for (int ix = 0; ix <= nx; ++ix) {
        for (int iy = 0; iy <= mesh.ny; ++iy) {
            const int id = ix * nodes_per_column + iy;
            mesh.nodes(id, 0) = ix * dx;
            mesh.nodes(id, 1) = row_y[iy];
        }
    }

    const int n_elems = nx * mesh.ny;
    mesh.elements.resize(n_elems, 4);
    mesh.element_layer.resize(n_elems);
    int e = 0;
    for (int ix = 0; ix < nx; ++ix) {
        for (int iy = 0; iy < mesh.ny; ++iy, ++e) {
            const int n00 = ix * nodes_per_column + iy;
            const int n10 = (ix + 1) * nodes_per_column + iy;
            mesh.elements(e, 0) = n00;
            mesh.elements(e, 1) = n10;
            mesh.elements(e, 2) = n10 + 1;
            mesh.elements(e, 3) = n00 + 1;
            mesh.element_layer[e] = iy / ny_per_layer;
        }
    }

    // Symmetry on the left edge: ux fixed on every left-edge node.
    for (int iy = 0; iy <= mesh.ny; ++iy) mesh.constrained_dofs.push_back(2 * iy);
    // Right-edge center node fixed in x.
    const int right_center = nx * nodes_per_column + mesh.ny / 2;
    mesh.constrained_dofs.push_back(2 * right_center);

    // Sensor: top-surface node nearest the sensor position.
    const int top_iy = mesh.ny;
    int best = -1;
    double best_d = std::numeric_limits<double>::max();
    for (int ix = 0; ix <= nx; ++ix) {
        const int id = ix * nodes_per_column + top_iy;
        const double d = std::abs(mesh.nodes(id, 0) - geometry.sensor_position);
        if (d < best_d) {
            best_d = d;
            best = id;
        }
    }
    mesh.sensor_node = best;
    mesh.sensor_dof = 2 * best + 1;

    // Actuators: uy of the top-left and bottom-left nodes, driven in phase to
    // excite the antisymmetric (flexural) mode.
    mesh.actuated_dofs = {2 * (0 * nodes_per_column + 0) + 1,
                          2 * (0 * nodes_per_column + top_iy) + 1};
    return mesh;
}

}  // namespace lamid
