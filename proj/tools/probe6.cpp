#include <cstdio>
#include "lamid/assembly.hpp"
#include "lamid/mesh.hpp"
#include "lamid/newmark.hpp"
#include "lamid/observe.hpp"
using namespace lamid;
int main() {
    auto mesh = build_mesh(default_laminate(), 400, 1);
    ExcitationSignal sig; sig.actuated_dofs = mesh.actuated_dofs;
    WaveguideModel model(mesh, ParametricDomain{});
    auto a = model.assemble({0.8e9, 0.110, 0.01});
    auto b = model.assemble({0.8e9, 0.150, 0.01});
    SparseMat d = a.stiffness - b.stiffness;
    std::printf("K(110mm) vs K(150mm) max diff: %.3e\n",
                d.coeffs().size() ? d.coeffs().cwiseAbs().maxCoeff() : 0.0);
    auto ta = observe(newmark_solve(a, sig, 4.17e-7, 500), mesh);
    auto tb = observe(newmark_solve(b, sig, 4.17e-7, 500), mesh);
    std::printf("trace diff rel: %.4f\n", (ta.values - tb.values).norm() / ta.values.norm());
    auto dmg_a = model.damaged_elements({0.8e9, 0.110, 0.01});
    auto dmg_b = model.damaged_elements({0.8e9, 0.150, 0.01});
    std::printf("damaged sets: %zu @110 (first cx %.4f), %zu @150 (first cx %.4f)\n",
                dmg_a.size(), mesh.element_centroid_x(dmg_a[0]),
                dmg_b.size(), mesh.element_centroid_x(dmg_b[0]));
    return 0;
}
