#include "lamid/mcmc.hpp"

#include <cmath>
#include <limits>

namespace lamid {

namespace detail {

double reflect_unit(double y) {
    y = std::fmod(y, 2.0);
    if (y < 0.0) y += 2.0;
    return y > 1.0 ? 2.0 - y : y;
}

}  // namespace detail

DamageParams propose(const DamageParams& theta_prev, const ProposalConfig& cfg,
                     const ParamScaler& scaler, std::mt19937_64& rng) {
    std::normal_distribution<double> n01(0.0, 1.0);
    Eigen::Vector3d y = scaler.scale(theta_prev);
    for (int d = 0; d < 3; ++d) y[d] = detail::reflect_unit(y[d] + cfg.step_sigma[d] * n01(rng));
    return scaler.unscale(y);
}

double acceptance_probability(double logpost_star, double logpost_prev) {
    const double inf = std::numeric_limits<double>::infinity();
    if (logpost_star == -inf) return 0.0;
    if (logpost_prev == -inf) return inf;
    return std::exp(logpost_star - logpost_prev);
}

Chain run_chain(int iterations, const DamageParams& start, const LogTarget& log_target,
                const ParametricDomain& domain, const ProposalConfig& cfg, std::uint64_t seed) {
    if (iterations < 1) throw InvalidInputError("need at least one iteration");
    ParamScaler scaler(domain);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    Chain chain;
    chain.seed = seed;
    chain.proposal = cfg;
    chain.samples.resize(iterations + 1, 3);
    chain.log_posteriors.resize(iterations + 1);
    chain.accepted.reserve(iterations);

    DamageParams theta = start;
    double lp;
    try {
        lp = log_target(theta);
    } catch (const std::exception& e) {
        chain.aborted = true;
        chain.error = e.what();
        chain.samples.conservativeResize(0, 3);
        chain.log_posteriors.conservativeResize(0);
        return chain;
    }
    auto put = [&](int i) {
        chain.samples.row(i) << theta.youngs_modulus, theta.position, theta.extent;
        chain.log_posteriors[i] = lp;
    };
    put(0);

    for (int i = 1; i <= iterations; ++i) {
        DamageParams cand = propose(theta, cfg, scaler, rng);
        double lp_cand;
        try {
            lp_cand = log_target(cand);
            ++chain.forward_solves;
        } catch (const std::exception& e) {
            chain.aborted = true;
            chain.error = e.what();
            chain.samples.conservativeResize(i, 3);
            chain.log_posteriors.conservativeResize(i);
            return chain;
        }
        const double alpha = acceptance_probability(lp_cand, lp);
        const double beta = u01(rng);
        if (alpha > beta) {
            theta = cand;
            lp = lp_cand;
            chain.accepted.push_back(1);
        } else {
            chain.accepted.push_back(0);
        }
        put(i);
    }
    return chain;
}

Chain run_chain(int iterations, const DamageParams& start, const ForwardModel& forward,
                const Measurement& meas, const Prior& prior, const ProposalConfig& cfg,
                std::uint64_t seed) {
    LogTarget target = [&](const DamageParams& theta) {
        const double lp = prior.log_density(theta);
        if (lp == -std::numeric_limits<double>::infinity()) return lp;
        return lp + log_likelihood(meas, forward.solve(theta));
    };
    return run_chain(iterations, start, target, prior.domain, cfg, seed);
}

Chain discard_burn_in(const Chain& chain, int n_burn) {
    if (n_burn < 0 || n_burn >= chain.length())
        throw InvalidInputError("burn-in must satisfy 0 <= n_burn < chain length");
    Chain out = chain;
    out.n_burn = n_burn;
    const int keep = chain.length() - n_burn;
    out.samples = chain.samples.bottomRows(keep).eval();
    out.log_posteriors = chain.log_posteriors.tail(keep).eval();
    if (!chain.accepted.empty()) {
        const int drop = std::min<int>(n_burn, static_cast<int>(chain.accepted.size()));
        out.accepted.assign(chain.accepted.begin() + drop, chain.accepted.end());
    }
    return out;
}

AutocorrelationResult autocorrelation(const Chain& chain, int max_lag) {
    const int n = chain.length();
    if (n <= max_lag) throw InvalidInputError("chain shorter than the requested lag range");
    AutocorrelationResult res;
    res.acf.resize(max_lag + 1, 3);
    res.band = 1.96 / std::sqrt(static_cast<double>(n));
    for (int d = 0; d < 3; ++d) {
        const Eigen::VectorXd x = chain.samples.col(d);
        const double mean = x.mean();
        const Eigen::VectorXd c = x.array() - mean;
        const double c0 = c.squaredNorm();
        if (c0 == 0.0) {
            res.constant[d] = true;
            res.acf.col(d).setZero();
            res.acf(0, d) = 1.0;
            continue;
        }
        for (int k = 0; k <= max_lag; ++k)
            res.acf(k, d) = c.head(n - k).dot(c.tail(n - k)) / c0;
    }
    return res;
}

ChainSummary summarize(const Chain& chain, const ParametricDomain& domain, int bins) {
    if (chain.length() == 0) throw InvalidInputError("empty chain");
    if (bins < 1) throw InvalidInputError("need at least one histogram bin");
    ChainSummary s;
    const int n = chain.length();
    s.histogram = Eigen::MatrixXd::Zero(bins, 3);
    s.bin_edges.resize(bins + 1, 3);
    const auto lo = domain.lower();
    const auto hi = domain.upper();
    for (int d = 0; d < 3; ++d) {
        const Eigen::VectorXd x = chain.samples.col(d);
        s.mean[d] = x.mean();
        s.stddev[d] = std::sqrt((x.array() - s.mean[d]).square().sum() / n);
        const double width = (hi[d] - lo[d]) / bins;
        for (int b = 0; b <= bins; ++b) s.bin_edges(b, d) = lo[d] + b * width;
        for (int i = 0; i < n; ++i) {
            int b = static_cast<int>((x[i] - lo[d]) / width);
            if (b >= 0 && b < bins) s.histogram(b, d) += 1.0;
            else if (x[i] == hi[d]) s.histogram(bins - 1, d) += 1.0;
        }
    }
    return s;
}

}  // namespace lamid
