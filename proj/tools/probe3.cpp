// scratch probe: static bending sanity + steel-only dispersion
#include <cstdio>

#include <Eigen/SparseCholesky>

#include "lamid/assembly.hpp"
#include "lamid/mesh.hpp"
#include "lamid/newmark.hpp"
#include "lamid/observe.hpp"

using namespace lamid;

int main() {
    {   // cantilever: steel strip 100 x 2 mm, tip load; Euler-Bernoulli check
        LaminateGeometry g;
        g.length = 0.100;
        g.layers = {MaterialLayer{0.002, 210e9, 0.3, 7850, LayerKind::steel}};
        g.sensor_position = 0.05;
        g.damaged_layer_index = 0;
        for (int nylayer : {4, 8, 16}) {
            auto mesh = build_mesh(g, 200, nylayer);
            // clamp the whole left edge (both dofs) by hand
            std::vector<Eigen::Triplet<double>> kt;
            WaveguideModel model(mesh, ParametricDomain{5e6, 300e9, 0.01, 0.09, 0.002, 0.015});
            auto sys = model.assemble(DamageParams{210e9, 0.05, 0.01});
            SparseMat K = sys.stiffness;
            const int npc = mesh.ny + 1;
            std::vector<char> fixed(mesh.dof_count(), 0);
            for (int iy = 0; iy <= mesh.ny; ++iy) {
                fixed[2 * iy] = 1;
                fixed[2 * iy + 1] = 1;
            }
            // rebuild K with full clamp: zero rows/cols, unit diag
            std::vector<Eigen::Triplet<double>> trips;
            for (int k = 0; k < K.outerSize(); ++k)
                for (SparseMat::InnerIterator it(K, k); it; ++it)
                    if (!fixed[it.row()] && !fixed[it.col()])
                        trips.emplace_back(it.row(), it.col(), it.value());
            for (int d = 0; d < mesh.dof_count(); ++d)
                if (fixed[d]) trips.emplace_back(d, d, 1.0);
            SparseMat Kc(mesh.dof_count(), mesh.dof_count());
            Kc.setFromTriplets(trips.begin(), trips.end());

            Eigen::VectorXd f = Eigen::VectorXd::Zero(mesh.dof_count());
            const int tip_node = 200 * npc + mesh.ny / 2;
            f[2 * tip_node + 1] = -1.0;  // 1 N down at the tip mid-height
            Eigen::SimplicialLDLT<SparseMat> ldlt(Kc);
            Eigen::VectorXd u = ldlt.solve(f);
            const double w_fem = u[2 * tip_node + 1];
            // plane strain: E' = E/(1-nu^2)
            const double Ep = 210e9 / (1 - 0.09);
            const double I = 0.002 * 0.002 * 0.002 / 12.0;
            const double w_eb = -1.0 * 0.1 * 0.1 * 0.1 / (3 * Ep * I);
            std::printf("cantilever ny=%d: w_fem %.4e w_theory %.4e ratio %.3f\n", nylayer, w_fem,
                        w_eb, w_fem / w_eb);
        }
    }

    {   // steel-only 1.96 mm plate, burst arrival at two stations
        LaminateGeometry g;
        g.length = 0.200;
        g.layers = {MaterialLayer{1.96e-3, 210e9, 0.3, 7850, LayerKind::steel}};
        g.sensor_position = 0.0575;
        g.damaged_layer_index = 0;
        auto mesh = build_mesh(g, 400, 16);
        ExcitationSignal sig;
        sig.actuated_dofs = mesh.actuated_dofs;
        WaveguideModel model(mesh, ParametricDomain{5e6, 300e9, 0.02, 0.15, 0.002, 0.015});
        auto sys = model.assemble(DamageParams{210e9, 0.07, 0.01});
        const double dt = 4.17e-7;
        const int steps = 500;
        auto traj = newmark_solve(sys, sig, dt, steps);
        const int npc = mesh.ny + 1;
        for (double x : {0.030, 0.060, 0.090, 0.120}) {
            int ix = int(x / mesh.element_dx() + 0.5);
            Eigen::VectorXd v = traj.displacements.row(2 * (ix * npc + mesh.ny) + 1).transpose();
            const double vmax = v.cwiseAbs().maxCoeff();
            int first = -1;
            for (int j = 0; j < steps; ++j)
                if (std::abs(v[j]) > 0.2 * vmax) {
                    first = j;
                    break;
                }
            std::printf("steel plate x=%.0f mm: 20%%-front at step %d (t=%.3e) max %.2e\n",
                        x * 1e3, first, first * dt, vmax);
        }
    }
    return 0;
}
