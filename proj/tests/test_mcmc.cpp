#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lamid/mcmc.hpp"

using namespace lamid;

namespace {

// unit-box domain: physical and unit-scaled coordinates coincide
const ParametricDomain kUnitBox{0.0, 1.0, 0.0, 1.0, 0.0, 1.0};

// product of three independent N(0.5, 0.1^2) densities restricted to the box
double toy_gaussian_logpdf(const DamageParams& p) {
    const double s = 0.1, m = 0.5;
    auto term = [&](double v) { return -0.5 * (v - m) * (v - m) / (s * s); };
    const auto a = p.as_array();
    for (double v : a)
        if (v < 0.0 || v > 1.0) return -std::numeric_limits<double>::infinity();
    return term(a[0]) + term(a[1]) + term(a[2]);
}

// two-sample Kolmogorov-Smirnov statistic
double ks_statistic(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i;
        else ++j;
        d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
    }
    return d;
}

}  // namespace

TEST_CASE("reflect_unit: mirror arithmetic at the box edge") {
    CHECK(detail::reflect_unit(1.02) == doctest::Approx(0.98).epsilon(1e-14));
    CHECK(detail::reflect_unit(-0.03) == doctest::Approx(0.03).epsilon(1e-14));
    CHECK(detail::reflect_unit(0.4) == doctest::Approx(0.4));
    CHECK(detail::reflect_unit(2.3) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(detail::reflect_unit(-1.2) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("propose: degenerate step keeps the state, spread matches sigma") {
    ParamScaler scaler(kUnitBox);
    std::mt19937_64 rng(8);

    ProposalConfig tiny;
    tiny.step_sigma = Eigen::Vector3d::Constant(1e-300);
    const DamageParams at{0.3, 0.6, 0.9};
    const auto same = propose(at, tiny, scaler, rng);
    CHECK(same.youngs_modulus == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(same.position == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(same.extent == doctest::Approx(0.9).epsilon(1e-12));

    ProposalConfig cfg;
    cfg.step_sigma = Eigen::Vector3d::Constant(0.05);
    const DamageParams center{0.5, 0.5, 0.5};
    const int n = 100000;
    Eigen::MatrixX3d steps(n, 3);
    for (int i = 0; i < n; ++i) {
        const auto q = propose(center, cfg, scaler, rng);
        steps.row(i) << q.youngs_modulus - 0.5, q.position - 0.5, q.extent - 0.5;
    }
    for (int d = 0; d < 3; ++d) {
        const double sd = std::sqrt(steps.col(d).squaredNorm() / n);
        CHECK(std::abs(sd - 0.05) / 0.05 < 0.03);
    }
}

TEST_CASE("acceptance_probability: ratio arithmetic and infinities") {
    CHECK(acceptance_probability(-3.0, -3.0) == doctest::Approx(1.0));
    CHECK(acceptance_probability(-2.0 + std::log(2.0), -2.0) == doctest::Approx(2.0));
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(acceptance_probability(-inf, -1.0) == 0.0);
    CHECK(acceptance_probability(-1.0, -inf) == inf);
}

TEST_CASE("run_chain: single rejected iteration repeats the start") {
    // target permits only the starting point
    const DamageParams start{0.5, 0.5, 0.5};
    LogTarget only_start = [&](const DamageParams& p) {
        const bool same = p.youngs_modulus == start.youngs_modulus &&
                          p.position == start.position && p.extent == start.extent;
        return same ? 0.0 : -std::numeric_limits<double>::infinity();
    };
    ProposalConfig cfg;
    auto chain = run_chain(1, start, only_start, kUnitBox, cfg, 3);
    REQUIRE(chain.length() == 2);
    CHECK(chain.samples.row(0) == chain.samples.row(1));
    CHECK(chain.acceptance_rate() == 0.0);
    CHECK(chain.forward_solves == 1);
}

TEST_CASE("run_chain: toy Gaussian target recovered") {
    ProposalConfig cfg;
    cfg.step_sigma = Eigen::Vector3d::Constant(0.15);
    const DamageParams start{0.2, 0.8, 0.5};
    auto chain = run_chain(10000, start, toy_gaussian_logpdf, kUnitBox, cfg, 2024);
    auto kept = discard_burn_in(chain, 500);
    auto s = summarize(kept, kUnitBox);
    for (int d = 0; d < 3; ++d) {
        CHECK(std::abs(s.mean[d] - 0.5) < 0.01);
        CHECK(std::abs(s.stddev[d] - 0.1) / 0.1 < 0.10);
    }
    CHECK(chain.acceptance_rate() > 0.05);
    CHECK(chain.acceptance_rate() < 0.95);

    // samples never leave the domain
    CHECK(chain.samples.minCoeff() >= 0.0);
    CHECK(chain.samples.maxCoeff() <= 1.0);
}

TEST_CASE("run_chain: determinism under fixed seeds") {
    ProposalConfig cfg;
    auto a = run_chain(500, DamageParams{0.5, 0.5, 0.5}, toy_gaussian_logpdf, kUnitBox, cfg, 11);
    auto b = run_chain(500, DamageParams{0.5, 0.5, 0.5}, toy_gaussian_logpdf, kUnitBox, cfg, 11);
    CHECK((a.samples - b.samples).cwiseAbs().maxCoeff() == 0.0);
    auto c = run_chain(500, DamageParams{0.5, 0.5, 0.5}, toy_gaussian_logpdf, kUnitBox, cfg, 12);
    CHECK((a.samples - c.samples).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("run_chain: acceptance rate falls as the step grows") {
    const DamageParams start{0.5, 0.5, 0.5};
    double prev = 2.0;
    for (double s : {0.05, 0.2, 0.6}) {
        ProposalConfig cfg;
        cfg.step_sigma = Eigen::Vector3d::Constant(s);
        auto chain = run_chain(8000, start, toy_gaussian_logpdf, kUnitBox, cfg, 5);
        const double rate = chain.acceptance_rate();
        CHECK(rate < prev + 0.02);
        prev = rate;
    }
}

TEST_CASE("run_chain: detailed balance against direct target samples (KS)") {
    ProposalConfig cfg;
    cfg.step_sigma = Eigen::Vector3d::Constant(0.15);
    auto chain = run_chain(20000, DamageParams{0.5, 0.5, 0.5}, toy_gaussian_logpdf, kUnitBox,
                           cfg, 31);
    auto kept = discard_burn_in(chain, 1000);

    // rough integrated autocorrelation time to thin the chain
    auto acf = autocorrelation(kept, 200);
    int act = 1;
    for (int k = 1; k <= 200; ++k) {
        if (acf.acf(k, 0) < 0.05) {
            act = k;
            break;
        }
        act = k;
    }
    std::vector<double> thinned;
    for (int i = 0; i < kept.length(); i += act) thinned.push_back(kept.samples(i, 0));

    std::mt19937_64 rng(7);
    std::normal_distribution<double> g(0.5, 0.1);
    std::vector<double> direct;
    for (size_t i = 0; i < thinned.size(); ++i) {
        double v = g(rng);
        while (v < 0.0 || v > 1.0) v = g(rng);
        direct.push_back(v);
    }
    const double d = ks_statistic(thinned, direct);
    const double n = static_cast<double>(thinned.size());
    const double crit = 1.628 * std::sqrt(2.0 / n);  // alpha = 0.01, equal sizes
    CHECK(d < crit);
}

TEST_CASE("discard_burn_in: bounds and bookkeeping") {
    ProposalConfig cfg;
    auto chain = run_chain(50, DamageParams{0.5, 0.5, 0.5}, toy_gaussian_logpdf, kUnitBox, cfg, 1);
    auto same = discard_burn_in(chain, 0);
    CHECK(same.length() == chain.length());
    auto last = discard_burn_in(chain, chain.length() - 1);
    CHECK(last.length() == 1);
    CHECK_THROWS_AS(discard_burn_in(chain, chain.length()), InvalidInputError);
    auto cut = discard_burn_in(chain, 10);
    CHECK(cut.n_burn == 10);
    CHECK(cut.samples.row(0) == chain.samples.row(10));
}

TEST_CASE("autocorrelation: lag zero, white noise band, constant chain") {
    Chain chain;
    const int n = 4000;
    chain.samples.resize(n, 3);
    std::mt19937_64 rng(13);
    std::normal_distribution<double> g;
    for (int i = 0; i < n; ++i)
        chain.samples.row(i) << g(rng), g(rng), g(rng);
    chain.log_posteriors = Eigen::VectorXd::Zero(n);

    auto res = autocorrelation(chain, 100);
    for (int d = 0; d < 3; ++d) CHECK(res.acf(0, d) == doctest::Approx(1.0));
    int outside = 0, total = 0;
    const double band = 3.0 / std::sqrt(double(n));
    for (int k = 1; k <= 100; ++k)
        for (int d = 0; d < 3; ++d) {
            ++total;
            if (std::abs(res.acf(k, d)) > band) ++outside;
        }
    CHECK(outside < 0.05 * total);

    Chain flat;
    flat.samples = Eigen::MatrixX3d::Ones(100, 3);
    flat.log_posteriors = Eigen::VectorXd::Zero(100);
    auto fr = autocorrelation(flat, 10);
    CHECK(fr.constant[0]);
    CHECK(fr.acf(0, 0) == 1.0);
    CHECK(fr.acf(5, 0) == 0.0);
}

TEST_CASE("summarize: constant and two-point chains") {
    ParametricDomain dom{0.0, 10.0, 0.0, 10.0, 0.0, 10.0};
    Chain flat;
    flat.samples = Eigen::MatrixX3d::Ones(20, 3) * 3.0;
    flat.log_posteriors = Eigen::VectorXd::Zero(20);
    auto s = summarize(flat, dom);
    for (int d = 0; d < 3; ++d) {
        CHECK(s.mean[d] == doctest::Approx(3.0));
        CHECK(s.stddev[d] == 0.0);
    }

    Chain two;
    two.samples.resize(2, 3);
    two.samples.row(0) << 2.0, 4.0, 6.0;
    two.samples.row(1) << 4.0, 8.0, 2.0;
    two.log_posteriors = Eigen::VectorXd::Zero(2);
    auto t = summarize(two, dom);
    CHECK(t.mean[0] == doctest::Approx(3.0));
    // 1/n convention: variance of {a,b} is ((a-b)/2)^2
    CHECK(t.stddev[0] == doctest::Approx(1.0));
    CHECK(t.stddev[1] == doctest::Approx(2.0));
    CHECK(t.stddev[2] == doctest::Approx(2.0));

    // histogram counts land in the right bins and sum to the sample count
    CHECK(t.histogram.col(0).sum() == doctest::Approx(2.0));
}
