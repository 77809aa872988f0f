// scratch probe: damage visibility across the domain + mini-ROM accuracy/cost
#include <chrono>
#include <cstdio>

#include "lamid/assembly.hpp"
#include "lamid/greedy.hpp"
#include "lamid/mesh.hpp"
#include "lamid/newmark.hpp"
#include "lamid/observe.hpp"

using namespace lamid;
using clk = std::chrono::steady_clock;

int main() {
    auto g = default_laminate();
    auto mesh = build_mesh(g, 400, 1);
    ExcitationSignal sig;
    sig.actuated_dofs = mesh.actuated_dofs;
    const double dt = 4.17e-7;
    const int steps = 500;

    WaveguideModel model(mesh, ParametricDomain{});
    WaveguideModel wide(mesh, ParametricDomain{5e6, 300e9, 0.02, 0.15, 0.002, 0.015});
    auto ref = observe(newmark_solve(wide.assemble({210e9, 0.07, 0.01}), sig, dt, steps), mesh);

    for (double xd : {0.020, 0.050, 0.080, 0.110, 0.150}) {
        auto tr = observe(newmark_solve(model.assemble({0.8e9, xd, 0.01}), sig, dt, steps), mesh);
        Eigen::VectorXd scat = tr.values - ref.values;
        const double smax = scat.cwiseAbs().maxCoeff();
        const double gmax = tr.values.cwiseAbs().maxCoeff();
        int first = -1;
        for (int j = 0; j < steps; ++j)
            if (std::abs(scat[j]) > 0.1 * gmax) {
                first = j;
                break;
            }
        std::printf("xd=%5.0f mm: max|scat|/max|trace| = %.2f, 10%%-of-trace first at step %d\n",
                    xd * 1e3, smax / gmax, first);
    }

    // mini ROM from 6 solves; accuracy at held-out theta + per-solve cost
    std::vector<Trajectory> trajs;
    std::vector<DamageParams> params = {{5e6, 0.02, 0.002},  {5e9, 0.15, 0.015},
                                        {5e6, 0.15, 0.002},  {5e9, 0.02, 0.015},
                                        {2.5e9, 0.085, 0.0085}, {0.8e9, 0.07, 0.01}};
    for (auto& p : params) trajs.push_back(newmark_solve(model.assemble(p), sig, dt, steps));
    auto snaps = collect_snapshots(trajs, params, 4);
    auto basis = pod_basis(snaps, PodTruncation::energy(1e-8));
    auto basis_ptr = std::make_shared<ReducedBasis>(basis);
    std::printf("mini basis n=%d\n", basis.n);

    std::mt19937_64 rng(99);
    Eigen::MatrixXd mass_phi = model.mass() * basis.phi;
    Eigen::MatrixXd mass_r = basis.phi.transpose() * mass_phi;
    for (int rep = 0; rep < 5; ++rep) {
        auto theta = model.domain().sample(rng);
        auto t0 = clk::now();
        auto sys = model.assemble(theta);
        auto hifi = observe(newmark_solve(sys, sig, dt, steps), mesh);
        auto t1 = clk::now();

        // rom solve with cached mass projection
        auto t2 = clk::now();
        auto sys2 = model.assemble(theta);
        ReducedSystem rsys;
        rsys.mass_r = mass_r;
        Eigen::MatrixXd kphi = sys2.stiffness * basis.phi;
        rsys.stiffness_r = basis.phi.transpose() * kphi;
        rsys.stiffness_r = 0.5 * (rsys.stiffness_r + rsys.stiffness_r.transpose()).eval();
        Eigen::VectorXd pattern = Eigen::VectorXd::Zero(mesh.dof_count());
        for (int d : sig.actuated_dofs) pattern[d] = 1.0;
        rsys.force_map = basis.phi.transpose() * pattern;
        rsys.sensor_row = basis.phi.row(mesh.sensor_dof);
        auto sol = reduced_solve(rsys, sig, dt, steps);
        auto t3 = clk::now();

        const double err = trace_relative_error(hifi, sol.trace);
        std::printf("theta (%.2e, %.3f, %.4f): rom err %.3f%%, hifi %.0f ms, rom %.0f ms\n",
                    theta.youngs_modulus, theta.position, theta.extent, err * 100,
                    std::chrono::duration<double, std::milli>(t1 - t0).count(),
                    std::chrono::duration<double, std::milli>(t3 - t2).count());
    }
    return 0;
}
