#include "lamid/enkf.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace lamid {

WindowSchedule make_schedule(double dt, int update_every, int start_step, int total_steps) {
    WindowSchedule s;
    s.dt = dt;
    s.update_every = update_every;
    s.start_step = start_step;
    s.window_count = std::max(0, (total_steps - 1 - start_step) / update_every);
    s.validate(total_steps);
    return s;
}

Ensemble init_ensemble(const ParametricDomain& domain, int n_particles, std::mt19937_64& rng) {
    if (n_particles < 2) throw InvalidInputError("ensemble needs at least two particles");
    ParamScaler scaler(domain);
    Ensemble ens;
    ens.particles.resize(n_particles, 3);
    for (int i = 0; i < n_particles; ++i)
        ens.particles.row(i) = scaler.scale(domain.sample(rng)).transpose();
    return ens;
}

Eigen::VectorXd predict(const Eigen::MatrixX3d& particles, const ForwardModel& forward,
                        const ParamScaler& pscaler, const UnitScaler& obs_scaler, int step) {
    Eigen::VectorXd out(particles.rows());
    for (Eigen::Index i = 0; i < particles.rows(); ++i) {
        Eigen::Vector3d y = particles.row(i).transpose().cwiseMax(0.0).cwiseMin(1.0);
        const SensorTrace trace = forward.solve(pscaler.unscale(y));
        if (step < 0 || step >= trace.size())
            throw InvalidInputError("observation step outside the solved horizon");
        out[i] = obs_scaler.scale(trace.values[step]);
    }
    return out;
}

EnsembleStats ensemble_stats(const Eigen::MatrixX3d& particles,
                             const Eigen::VectorXd& predictions) {
    const Eigen::Index n = particles.rows();
    if (n < 2) throw DegenerateEnsembleError("need at least two particles for sample statistics");
    if (predictions.size() != n)
        throw InvalidInputError("one prediction per particle required");

    EnsembleStats s;
    s.mean_params = particles.colwise().mean().transpose();
    s.mean_obs = predictions.mean();
    const Eigen::VectorXd ds = predictions.array() - s.mean_obs;
    s.c_ss = ds.squaredNorm() / static_cast<double>(n - 1);
    s.c_theta_s = (particles.rowwise() - s.mean_params.transpose()).transpose() * ds /
                  static_cast<double>(n - 1);
    return s;
}

Eigen::MatrixX3d analysis_update(const Eigen::MatrixX3d& particles, const EnsembleStats& stats,
                                 const Eigen::VectorXd& predictions, double observed_scaled,
                                 double sigma2_scaled, InnovationForm form) {
    const double denom = sigma2_scaled + stats.c_ss;
    if (denom <= 0.0) throw SingularGainError("sigma^2 + C_ss must be positive");
    const Eigen::Vector3d gain = stats.c_theta_s / denom;

    Eigen::MatrixX3d updated = particles;
    for (Eigen::Index i = 0; i < particles.rows(); ++i) {
        const double predicted =
            form == InnovationForm::per_particle ? predictions[i] : stats.mean_obs;
        updated.row(i) += (gain * (observed_scaled - predicted)).transpose();
    }
    return updated;
}

namespace {

struct TraceCache {
    std::vector<Eigen::Vector3d> key;
    std::vector<Eigen::VectorXd> trace;
    std::vector<char> valid;
};

}  // namespace

FilterResult run_filter(const Measurement& meas, const ForwardModel& forward,
                        const WindowSchedule& schedule, const ParametricDomain& domain,
                        const FilterOptions& opts) {
    schedule.validate(meas.size());
    if (meas.noise_sigma <= 0.0) throw InvalidNoiseError("measurement sigma must be positive");

    FilterResult res;
    res.domain = domain;
    const double obs_lo = meas.values.minCoeff();
    const double obs_hi = meas.values.maxCoeff();
    if (!(obs_hi > obs_lo)) throw DegenerateRangeError("measurement has no dynamic range");
    res.obs_scaler = UnitScaler(obs_lo, obs_hi);
    const double sigma_scaled = meas.noise_sigma / res.obs_scaler.span();
    const double sigma2_scaled = sigma_scaled * sigma_scaled;

    ParamScaler pscaler(domain);
    std::mt19937_64 rng(opts.seed);
    Ensemble ens = init_ensemble(domain, opts.n_particles, rng);
    const int n = opts.n_particles;

    Eigen::Vector3d truth_unit = Eigen::Vector3d::Constant(0.5);
    const bool experiment_mode = meas.truth.has_value();
    if (experiment_mode) truth_unit = pscaler.scale(*meas.truth);

    TraceCache cache;
    cache.key.assign(n, Eigen::Vector3d::Constant(-1.0));
    cache.trace.assign(n, Eigen::VectorXd());
    cache.valid.assign(n, 0);
    std::atomic<long> clamped{0};

    const int threads = opts.threads > 0 ? opts.threads
                                         : std::max(1u, std::thread::hardware_concurrency());

    std::atomic<long long> solves{0};
    auto refresh_cache = [&]() {
        std::atomic<int> next{0};
        auto worker = [&]() {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                const Eigen::Vector3d p = ens.particles.row(i).transpose();
                if (cache.valid[i] && cache.key[i] == p) continue;
                Eigen::Vector3d y = p.cwiseMax(0.0).cwiseMin(1.0);
                if (y != p) clamped.fetch_add(1);
                cache.trace[i] = forward.solve(pscaler.unscale(y)).values;
                cache.key[i] = p;
                cache.valid[i] = 1;
                solves.fetch_add(1);
            }
        };
        std::vector<std::thread> team;
        for (int t = 1; t < threads; ++t) team.emplace_back(worker);
        worker();
        for (auto& t : team) t.join();
        res.forward_solves = solves.load();
    };

    res.std_history.resize(schedule.window_count, 3);
    std::array<int, 3> streak{0, 0, 0};

    std::normal_distribution<double> pert(0.0, sigma_scaled);

    for (int k = 0; k < schedule.window_count; ++k) {
        refresh_cache();
        const int step = schedule.observed_step(k);
        Eigen::VectorXd predictions(n);
        for (int i = 0; i < n; ++i)
            predictions[i] = res.obs_scaler.scale(cache.trace[i][step]);

        const EnsembleStats stats = ensemble_stats(ens.particles, predictions);
        double observed = res.obs_scaler.scale(meas.values[step]);
        if (opts.perturb_observations) {
            Eigen::VectorXd obs_i(n);
            for (int i = 0; i < n; ++i) obs_i[i] = observed + pert(rng);
            Eigen::MatrixX3d updated = ens.particles;
            const double denom = sigma2_scaled + stats.c_ss;
            if (denom <= 0.0) throw SingularGainError("sigma^2 + C_ss must be positive");
            const Eigen::Vector3d gain = stats.c_theta_s / denom;
            for (int i = 0; i < n; ++i) {
                const double predicted = opts.innovation == InnovationForm::per_particle
                                             ? predictions[i]
                                             : stats.mean_obs;
                updated.row(i) += (gain * (obs_i[i] - predicted)).transpose();
            }
            ens.particles = updated;
        } else {
            ens.particles = analysis_update(ens.particles, stats, predictions, observed,
                                            sigma2_scaled, opts.innovation);
        }
        ens.window_index = k + 1;
        res.history.push_back(ens.particles);

        const Eigen::Vector3d mean = ens.particles.colwise().mean().transpose();
        for (int d = 0; d < 3; ++d) {
            const double var =
                (ens.particles.col(d).array() - mean[d]).square().sum() / (n - 1);
            res.std_history(k, d) = std::sqrt(var);
            if (!experiment_mode) continue;  // production mode reports stds only
            const bool tight = res.std_history(k, d) < opts.std_tol;
            const bool close = std::abs(mean[d] - truth_unit[d]) < opts.mean_tol[d];
            if (tight && close) {
                if (++streak[d] >= opts.consecutive && res.converged_at[d] < 0)
                    res.converged_at[d] = k + 1;
            } else {
                streak[d] = 0;
            }
        }
        if (res.all_converged_at < 0 && res.converged_at[0] > 0 && res.converged_at[1] > 0 &&
            res.converged_at[2] > 0) {
            res.all_converged_at = k + 1;
            res.solves_to_convergence = res.forward_solves;
        }
    }
    res.ensemble = ens;
    res.clamped_evaluations = clamped.load();
    return res;
}

Eigen::MatrixXd mse_history(const std::vector<Eigen::MatrixX3d>& history,
                            const Eigen::Vector3d& truth_unit) {
    Eigen::MatrixXd mse(history.size(), 3);
    for (size_t k = 0; k < history.size(); ++k)
        for (int d = 0; d < 3; ++d)
            mse(k, d) = (history[k].col(d).array() - truth_unit[d]).square().mean();
    return mse;
}

}  // namespace lamid
