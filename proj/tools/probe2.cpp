// scratch probe: group velocity + snapshot spectrum
#include <chrono>
#include <cstdio>

#include "lamid/assembly.hpp"
#include "lamid/greedy.hpp"
#include "lamid/mesh.hpp"
#include "lamid/newmark.hpp"
#include "lamid/observe.hpp"
#include "lamid/pod.hpp"

using namespace lamid;

static int peak_step(const Eigen::VectorXd& v, int from = 0) {
    int p = from;
    for (int j = from; j < v.size(); ++j)
        if (std::abs(v[j]) > std::abs(v[p])) p = j;
    return p;
}

int main(int argc, char** argv) {
    auto g = default_laminate();
    const double dt = 4.17e-7;
    const int steps = 500;
    ExcitationSignal sig;

    {   // group velocity from two virtual sensors on an undamaged-equivalent plate
        auto mesh = build_mesh(g, 400, 1);
        sig.actuated_dofs = mesh.actuated_dofs;
        WaveguideModel wide(mesh, ParametricDomain{5e6, 300e9, 0.02, 0.15, 0.002, 0.015});
        auto sys = wide.assemble(DamageParams{210e9, 0.07, 0.01});
        auto traj = newmark_solve(sys, sig, dt, steps);
        const int npc = mesh.ny + 1;
        auto row = [&](double x) {
            int ix = int(x / mesh.element_dx() + 0.5);
            return 2 * (ix * npc + mesh.ny) + 1;
        };
        const double xa = 0.040, xb = 0.080;
        int pa = peak_step(traj.displacements.row(row(xa)).transpose());
        int pb = peak_step(traj.displacements.row(row(xb)).transpose());
        std::printf("peak at %f: step %d; at %f: step %d -> cg = %.0f m/s\n", xa, pa, xb, pb,
                    (xb - xa) / ((pb - pa) * dt));
    }

    {   // snapshot spectrum from 5 solves, stride 4
        auto mesh = build_mesh(g, 400, 1);
        sig.actuated_dofs = mesh.actuated_dofs;
        WaveguideModel model(mesh, ParametricDomain{});
        std::vector<Trajectory> trajs;
        std::vector<DamageParams> params = {{0.8e9, 0.07, 0.01},
                                            {5e6, 0.02, 0.002},
                                            {5e9, 0.15, 0.015},
                                            {1e8, 0.12, 0.008},
                                            {2.5e9, 0.04, 0.004}};
        auto t0 = std::chrono::steady_clock::now();
        for (auto& p : params) trajs.push_back(newmark_solve(model.assemble(p), sig, dt, steps));
        auto t1 = std::chrono::steady_clock::now();
        std::printf("5 hifi solves: %.1f s\n", std::chrono::duration<double>(t1 - t0).count());

        auto snaps = collect_snapshots(trajs, params, 4);
        std::printf("snapshots: %ld x %ld\n", (long)snaps.rows(), (long)snaps.cols());
        auto basis = pod_basis(snaps, PodTruncation::energy(1e-8));
        auto t2 = std::chrono::steady_clock::now();
        std::printf("pod: %.1f s, n(tol 1e-8) = %d, orth err %.2e\n",
                    std::chrono::duration<double>(t2 - t1).count(), basis.n,
                    basis.orthonormality_error());
        const auto& s = basis.singular_values;
        double total = s.squaredNorm(), tail = total;
        for (int n : {20, 40, 60, 80, 100, 120, 160, 200}) {
            if (n > s.size()) break;
            tail = total;
            for (int k = 0; k < n; ++k) tail -= s[k] * s[k];
            std::printf("  n=%d tail energy %.2e\n", n, tail / total);
        }
    }
    return 0;
}
