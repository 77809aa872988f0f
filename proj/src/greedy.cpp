#include "lamid/greedy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace lamid {

std::vector<DamageParams> latin_hypercube(const ParametricDomain& domain, int count,
                                          std::mt19937_64& rng) {
    if (count < 1) throw InvalidInputError("pool size must be positive");
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto lo = domain.lower();
    const auto hi = domain.upper();

    std::array<std::vector<int>, 3> strata;
    for (auto& s : strata) {
        s.resize(count);
        std::iota(s.begin(), s.end(), 0);
        std::shuffle(s.begin(), s.end(), rng);
    }
    std::vector<DamageParams> pool(count);
    for (int i = 0; i < count; ++i) {
        std::array<double, 3> q{};
        for (int d = 0; d < 3; ++d) {
            const double unit = (strata[d][i] + u(rng)) / count;
            q[d] = lo[d] + unit * (hi[d] - lo[d]);
        }
        pool[i] = DamageParams{q[0], q[1], q[2]};
    }
    return pool;
}

namespace {

/// Strided displacement columns of one solve, appended to the cache.
void append_snapshots(Eigen::MatrixXd& cache, const Trajectory& traj, int stride) {
    const Eigen::Index added = (traj.steps + stride - 1) / stride;
    const Eigen::Index old = cache.cols();
    cache.conservativeResize(traj.displacements.rows(), old + added);
    Eigen::Index c = old;
    for (int j = 0; j < traj.steps; j += stride) cache.col(c++) = traj.displacements.col(j);
}

double evaluate_candidate(const WaveguideModel& model, const ReducedBasis& basis,
                          const ExcitationSignal& sig, double dt, int steps,
                          const DamageParams& theta, int residual_stride) {
    const SystemMatrices sys = model.assemble(theta);
    auto ops = project_operators(sys, basis);

    ReducedSystem rsys;
    rsys.mass_r = ops.mass_r;
    rsys.stiffness_r = ops.stiffness_r;
    Eigen::VectorXd pattern = Eigen::VectorXd::Zero(sys.size());
    for (int d : sig.actuated_dofs) pattern[d] = 1.0;
    rsys.force_map = basis.phi.transpose() * pattern;

    const ReducedSolution sol = reduced_solve(rsys, sig, dt, steps);
    return residual_indicator(ops, sol.reduced, sig, sig.actuated_dofs, sys.size(),
                              residual_stride);
}

}  // namespace

GreedyResult greedy_train(const WaveguideModel& model, const ExcitationSignal& sig, double dt,
                          int steps, const GreedyOptions& options) {
    if (options.pool_size < 8) throw InvalidInputError("candidate pool must hold at least 8 points");
    if (options.max_hifi_solves < 2) throw InvalidInputError("solve budget must be at least 2");

    std::mt19937_64 rng(options.seed);
    const std::vector<DamageParams> pool = latin_hypercube(model.domain(), options.pool_size, rng);

    // Reference force magnitude: peak burst amplitude over the actuation pattern.
    const Eigen::VectorXd g = burst_series(sig, dt, steps);
    const double force_scale =
        g.cwiseAbs().maxCoeff() * std::sqrt(static_cast<double>(sig.actuated_dofs.size()));
    if (force_scale <= 0.0) throw InvalidInputError("excitation must be nonzero for training");

    GreedyResult result;
    Eigen::MatrixXd snapshot_cache;
    std::vector<DamageParams> sources;

    auto run_hifi = [&](const DamageParams& theta) {
        const SystemMatrices sys = model.assemble(theta);
        const Trajectory traj = newmark_solve(sys, sig, dt, steps);
        append_snapshots(snapshot_cache, traj, options.snapshot_stride);
        sources.push_back(theta);
        ++result.hifi_solves;
    };

    std::vector<DamageParams> seeds = model.domain().corners();
    seeds.push_back(model.domain().center());
    for (const auto& theta : seeds) run_hifi(theta);

    const PodTruncation rule = PodTruncation::energy(options.energy_tol, options.n_max);
    auto rebuild = [&]() {
        SnapshotMatrix snaps{snapshot_cache, sources};
        result.basis = pod_basis(snaps, rule);
    };
    rebuild();

    const int threads = options.threads > 0
                            ? options.threads
                            : std::max(1u, std::thread::hardware_concurrency());

    int iteration = 0;
    while (result.hifi_solves < options.max_hifi_solves) {
        std::vector<double> indicator(pool.size());
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (size_t i = next.fetch_add(1); i < pool.size(); i = next.fetch_add(1))
                indicator[i] = evaluate_candidate(model, result.basis, sig, dt, steps, pool[i],
                                                  options.residual_stride);
        };
        std::vector<std::thread> team;
        for (int t = 1; t < threads; ++t) team.emplace_back(worker);
        worker();
        for (auto& t : team) t.join();

        const auto argmax = std::max_element(indicator.begin(), indicator.end());
        const size_t pick = static_cast<size_t>(argmax - indicator.begin());
        const double rel = *argmax / force_scale;

        if (rel < options.tol_stop) {
            result.reached_tolerance = true;
            result.log.push_back({iteration, pool[pick], rel, result.basis.n});
            break;
        }
        run_hifi(pool[pick]);
        rebuild();
        result.log.push_back({iteration, pool[pick], rel, result.basis.n});
        ++iteration;
    }
    return result;
}

}  // namespace lamid
