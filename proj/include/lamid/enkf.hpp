#pragma once

#include <array>
#include <random>
#include <vector>

#include "lamid/measurement.hpp"
#include "lamid/scaler.hpp"

namespace lamid {

/// Update grid: the filter assimilates the measurement sample at the end of
/// every window of update_every raw time steps, starting after the
/// excitation packet has passed the sensor.
struct WindowSchedule {
    double dt = 0.0;
    int update_every = 2;   // K
    int window_count = 0;   // N_tau
    int start_step = 0;

    int observed_step(int k) const { return start_step + (k + 1) * update_every; }

    void validate(int total_steps) const {
        if (update_every < 1) throw InvalidInputError("update_every must be >= 1");
        if (window_count < 0) throw InvalidInputError("window_count must be >= 0");
        if (start_step < 0) throw InvalidInputError("start_step must be >= 0");
        if (window_count > 0 && observed_step(window_count - 1) >= total_steps)
            throw InvalidInputError("window schedule runs past the measurement length");
    }
};

/// Largest schedule that fits a measurement of total_steps samples.
WindowSchedule make_schedule(double dt, int update_every, int start_step, int total_steps);

/// Particle set in unit-scaled parameter coordinates.
struct Ensemble {
    Eigen::MatrixX3d particles;
    int window_index = 0;

    int size() const { return static_cast<int>(particles.rows()); }
};

struct EnsembleStats {
    double mean_obs = 0.0;
    Eigen::Vector3d mean_params = Eigen::Vector3d::Zero();
    double c_ss = 0.0;               // scalar output covariance
    Eigen::Vector3d c_theta_s = Eigen::Vector3d::Zero();
};

enum class InnovationForm {
    per_particle,   // observed - prediction of this particle (default)
    ensemble_mean,  // observed - ensemble-mean prediction
};

/// i.i.d. uniform draws from the domain, stored unit-scaled.
Ensemble init_ensemble(const ParametricDomain& domain, int n_particles, std::mt19937_64& rng);

/// Forward-solve every particle and read the unit-scaled sensor value at one
/// step. Unit coordinates are clamped into [0,1] for the physical evaluation.
Eigen::VectorXd predict(const Eigen::MatrixX3d& particles, const ForwardModel& forward,
                        const ParamScaler& pscaler, const UnitScaler& obs_scaler, int step);

/// Sample means and covariances with 1/(N_e - 1) normalization.
EnsembleStats ensemble_stats(const Eigen::MatrixX3d& particles,
                             const Eigen::VectorXd& predictions);

/// Kalman analysis step on the parameters only; the state is untouched.
Eigen::MatrixX3d analysis_update(const Eigen::MatrixX3d& particles, const EnsembleStats& stats,
                                 const Eigen::VectorXd& predictions, double observed_scaled,
                                 double sigma2_scaled,
                                 InnovationForm form = InnovationForm::per_particle);

struct FilterOptions {
    int n_particles = 6;
    InnovationForm innovation = InnovationForm::per_particle;
    bool perturb_observations = false;
    // experiment-mode convergence: unit-scaled std below std_tol AND mean
    // within mean_tol of the truth for `consecutive` updates in a row
    double std_tol = 0.02;
    Eigen::Vector3d mean_tol{0.15, 0.05, 0.05};
    int consecutive = 5;
    std::uint64_t seed = 1u;
    int threads = 0;  // 0 = hardware concurrency
};

struct FilterResult {
    Ensemble ensemble;                      // final state
    std::vector<Eigen::MatrixX3d> history;  // particles after each update
    Eigen::MatrixXd std_history;            // updates x 3, unit-scaled
    long long forward_solves = 0;           // solves run by the filter
    std::array<int, 3> converged_at{-1, -1, -1};  // update count per coordinate
    int all_converged_at = -1;
    long long solves_to_convergence = -1;
    UnitScaler obs_scaler;
    ParametricDomain domain;
    long clamped_evaluations = 0;

    Eigen::Vector3d mean_unit() const { return ensemble.particles.colwise().mean(); }
};

/// Full prediction-analysis sweep over the schedule. Each particle's reduced
/// solve covers the whole horizon and is reused until an update changes it.
FilterResult run_filter(const Measurement& meas, const ForwardModel& forward,
                        const WindowSchedule& schedule, const ParametricDomain& domain,
                        const FilterOptions& opts);

/// Per-update mean squared error of the particles, unit-scaled coordinates.
Eigen::MatrixXd mse_history(const std::vector<Eigen::MatrixX3d>& history,
                            const Eigen::Vector3d& truth_unit);

}  // namespace lamid
