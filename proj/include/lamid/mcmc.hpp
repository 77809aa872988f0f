#pragma once

#include <array>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lamid/measurement.hpp"
#include "lamid/prior.hpp"
#include "lamid/scaler.hpp"

namespace lamid {

/// Random-walk step sizes in unit-scaled coordinates; the walk reflects at
/// the [0,1] box boundary, which keeps the proposal symmetric.
struct ProposalConfig {
    Eigen::Vector3d step_sigma{0.05, 0.05, 0.05};
};

struct Chain {
    Eigen::MatrixX3d samples;        // (iterations+1) x 3, physical units; row 0 = start
    Eigen::VectorXd log_posteriors;  // same length as samples
    std::vector<char> accepted;      // per iteration
    std::uint64_t seed = 0;
    ProposalConfig proposal;
    long long forward_solves = 0;    // one per proposal
    int n_burn = 0;                  // recorded by discard_burn_in
    bool aborted = false;
    std::string error;

    int length() const { return static_cast<int>(samples.rows()); }
    double acceptance_rate() const {
        if (accepted.empty()) return 0.0;
        long n = 0;
        for (char a : accepted) n += a != 0;
        return static_cast<double>(n) / static_cast<double>(accepted.size());
    }
};

namespace detail {
/// Fold a unit-scaled coordinate back into [0,1] by mirror reflection.
double reflect_unit(double y);
}  // namespace detail

/// Symmetric reflected Gaussian step around theta_prev.
DamageParams propose(const DamageParams& theta_prev, const ProposalConfig& cfg,
                     const ParamScaler& scaler, std::mt19937_64& rng);

/// alpha = exp(logpost_star - logpost_prev); 0 for an impossible proposal,
/// +inf when escaping an impossible current state.
double acceptance_probability(double logpost_star, double logpost_prev);

using LogTarget = std::function<double(const DamageParams&)>;

/// Random-walk Metropolis-Hastings against an arbitrary log target.
/// Accepts the candidate iff alpha > beta with beta ~ U(0,1).
Chain run_chain(int iterations, const DamageParams& start, const LogTarget& log_target,
                const ParametricDomain& domain, const ProposalConfig& cfg, std::uint64_t seed);

/// Posterior sampling: log target = log_likelihood(forward(theta)) + log_prior.
Chain run_chain(int iterations, const DamageParams& start, const ForwardModel& forward,
                const Measurement& meas, const Prior& prior, const ProposalConfig& cfg,
                std::uint64_t seed);

Chain discard_burn_in(const Chain& chain, int n_burn);

struct AutocorrelationResult {
    Eigen::MatrixXd acf;  // (max_lag+1) x 3
    double band = 0.0;    // 1.96 / sqrt(chain length)
    std::array<bool, 3> constant{false, false, false};
};

AutocorrelationResult autocorrelation(const Chain& chain, int max_lag);

struct ChainSummary {
    Eigen::Vector3d mean;
    Eigen::Vector3d stddev;        // 1/n variance convention
    Eigen::MatrixXd histogram;     // bins x 3 counts
    Eigen::MatrixXd bin_edges;     // (bins+1) x 3 over the domain ranges
};

ChainSummary summarize(const Chain& chain, const ParametricDomain& domain, int bins = 30);

}  // namespace lamid
