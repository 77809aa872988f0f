// scratch probe: which ingredient slows the laminate wave
#include <cstdio>

#include "lamid/assembly.hpp"
#include "lamid/mesh.hpp"
#include "lamid/newmark.hpp"

using namespace lamid;

static void front_speed(const char* label, const LaminateGeometry& g, int ny_per_layer) {
    auto mesh = build_mesh(g, 400, ny_per_layer);
    ExcitationSignal sig;
    sig.actuated_dofs = mesh.actuated_dofs;
    WaveguideModel model(mesh, ParametricDomain{5e6, 300e9, 0.02, 0.15, 0.002, 0.015});
    auto sys = model.assemble(DamageParams{g.layers[g.damaged_layer_index].youngs_modulus, 0.07,
                                           0.01});
    const double dt = 4.17e-7;
    const int steps = 500;
    auto traj = newmark_solve(sys, sig, dt, steps);
    const int npc = mesh.ny + 1;
    double x0 = 0.03, x1 = 0.12;
    int f0 = -1, f1 = -1;
    for (double* xp : {&x0, &x1}) {
        int ix = int(*xp / mesh.element_dx() + 0.5);
        Eigen::VectorXd v = traj.displacements.row(2 * (ix * npc + mesh.ny) + 1).transpose();
        const double vmax = v.cwiseAbs().maxCoeff();
        int first = -1;
        for (int j = 0; j < steps; ++j)
            if (std::abs(v[j]) > 0.2 * vmax) {
                first = j;
                break;
            }
        (xp == &x0 ? f0 : f1) = first;
    }
    std::printf("%-28s front steps %3d -> %3d, speed %.0f m/s\n", label, f0, f1,
                (x1 - x0) / ((f1 - f0) * dt));
}

int main() {
    {   // all-steel, same 16-layer slicing as the default
        LaminateGeometry g = default_laminate();
        for (auto& l : g.layers) l = MaterialLayer{l.thickness, 210e9, 0.3, 7850, LayerKind::steel};
        g.damaged_layer_index = 14;
        front_speed("16 layers all steel", g, 1);
    }
    {   // default alternating stack
        front_speed("default steel/cfrp E=60", default_laminate(), 1);
    }
    {   // stiffer cfrp
        LaminateGeometry g = default_laminate();
        for (auto& l : g.layers)
            if (l.kind == LayerKind::cfrp) l.youngs_modulus = 120e9;
        front_speed("steel/cfrp E=120", g, 1);
    }
    {   // lighter cfrp density only
        LaminateGeometry g = default_laminate();
        for (auto& l : g.layers)
            if (l.kind == LayerKind::cfrp) l.density = 800.0;
        front_speed("steel/cfrp rho=800", g, 1);
    }
    {   // default with 2 rows per layer: discretization effect
        front_speed("default, ny_per_layer=2", default_laminate(), 2);
    }
    {   // cfrp-only plate, 16 layers
        LaminateGeometry g = default_laminate();
        for (auto& l : g.layers) l = MaterialLayer{l.thickness, 60e9, 0.3, 1600, LayerKind::cfrp};
        g.damaged_layer_index = 14;
        front_speed("16 layers all cfrp", g, 1);
    }
    return 0;
}
