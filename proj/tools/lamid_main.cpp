// temporary probe; replaced by the real CLI later
#include <chrono>
#include <cstdio>

#include "lamid/assembly.hpp"
#include "lamid/mesh.hpp"
#include "lamid/newmark.hpp"
#include "lamid/observe.hpp"
#include "lamid/reduced.hpp"

using namespace lamid;
using clk = std::chrono::steady_clock;

static double ms(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

int main() {
    auto g = default_laminate();
    auto t0 = clk::now();
    auto mesh = build_mesh(g, 400, 1);
    auto t1 = clk::now();
    std::printf("mesh: %d nodes, %d elements, %d dofs (%.1f ms)\n", mesh.node_count(),
                mesh.element_count(), mesh.dof_count(), ms(t0, t1));

    WaveguideModel model(mesh, ParametricDomain{});
    auto t2 = clk::now();
    std::printf("model precompute: %.1f ms\n", ms(t1, t2));

    const DamageParams truth{0.8e9, 0.070, 0.010};
    auto sys = model.assemble(truth);
    auto t3 = clk::now();
    std::printf("assemble(theta): %.1f ms, nnz(K)=%d\n", ms(t2, t3),
                static_cast<int>(sys.stiffness.nonZeros()));

    ExcitationSignal sig;
    sig.actuated_dofs = mesh.actuated_dofs;
    const double dt = 4.17e-7;
    const int steps = 500;
    auto t4 = clk::now();
    auto traj = newmark_solve(sys, sig, dt, steps);
    auto t5 = clk::now();
    std::printf("hifi newmark %d steps: %.1f ms\n", steps, ms(t4, t5));

    auto trace = observe(traj, mesh);
    // reference: no-op damage (same modulus as the layer) needs a wider domain
    WaveguideModel model_wide(mesh, ParametricDomain{5e6, 300e9, 0.02, 0.15, 0.002, 0.015});
    auto sys0 = model_wide.assemble(DamageParams{210.0e9, 0.070, 0.010});
    auto trace0 = observe(newmark_solve(sys0, sig, dt, steps), mesh);

    const double dur = sig.duration();
    std::printf("excitation duration: %.4e s (~step %d)\n", dur, int(dur / dt));
    double gmax = trace.values.cwiseAbs().maxCoeff();
    std::printf("trace max |u|: %.3e\n", gmax);

    Eigen::VectorXd scat = trace.values - trace0.values;
    const double smax = scat.cwiseAbs().maxCoeff();
    int first = -1, peak = -1;
    double pv = 0;
    for (int j = 0; j < steps; ++j) {
        if (first < 0 && std::abs(scat[j]) > 0.05 * smax) first = j;
        if (std::abs(scat[j]) > pv) {
            pv = std::abs(scat[j]);
            peak = j;
        }
    }
    std::printf("scattered field: max %.3e at step %d (t=%.3e), first>5%% at step %d (t=%.3e)\n",
                smax, peak, peak * dt, first, first * dt);
    for (double m : {0.25, 0.5, 1.0, 1.5}) {
        int j0 = int((dur * (1 + m)) / dt);
        double w = 0, wd = 0;
        for (int j = j0; j < steps; ++j) {
            w = std::max(w, std::abs(trace.values[j]));
            wd = std::max(wd, std::abs(scat[j]));
        }
        std::printf("window margin %.2f dur: start step %d, max|trace|=%.3e max|scat|=%.3e\n", m,
                    j0, w, wd);
    }

    // projection cost at plausible basis sizes
    for (int n : {80, 120, 160}) {
        Eigen::MatrixXd phi = Eigen::MatrixXd::Random(mesh.dof_count(), n);
        ReducedBasis basis{phi, Eigen::VectorXd::Ones(n), n};
        auto p0 = clk::now();
        auto ops = project_operators(sys, basis);
        auto p1 = clk::now();
        std::printf("project n=%d: %.1f ms (K_r norm %.3e)\n", n, ms(p0, p1),
                    ops.stiffness_r.norm());
    }
    return 0;
}
