#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lamid/measurement.hpp"
#include "lamid/prior.hpp"
#include "lamid/scaler.hpp"

using namespace lamid;

namespace {

// tiny rig fast enough for synthesis tests
struct TinyRig {
    LaminateGeometry geom;
    LaminateMesh mesh;
    ParametricDomain domain{1e9, 60e9, 0.05, 0.15, 0.02, 0.06};
    std::shared_ptr<WaveguideModel> model;
    ExcitationSignal sig;
    std::shared_ptr<HiFiForward> hifi;
    double dt = 2e-6;
    int steps = 250;

    TinyRig() {
        geom.length = 0.2;
        geom.layers = {MaterialLayer{0.004, 70e9, 0.3, 2700, LayerKind::steel},
                       MaterialLayer{0.004, 150e9, 0.3, 4000, LayerKind::cfrp}};
        geom.sensor_position = 0.06;
        geom.damaged_layer_index = 0;
        mesh = build_mesh(geom, 30, 1);
        model = std::make_shared<WaveguideModel>(mesh, domain);
        sig.center_frequency = 40e3;
        sig.cycle_count = 3;
        sig.actuated_dofs = mesh.actuated_dofs;
        hifi = std::make_shared<HiFiForward>(model, sig, dt, steps);
    }
};

}  // namespace

TEST_CASE("unit scaler: endpoints, midpoint, round trip, no clamping") {
    UnitScaler s(2.0, 10.0);
    CHECK(s.scale(2.0) == 0.0);
    CHECK(s.scale(10.0) == 1.0);
    CHECK(s.scale(6.0) == 0.5);
    CHECK(s.scale(12.0) > 1.0);
    CHECK(s.scale(0.0) < 0.0);

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-5.0, 15.0);
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng);
        CHECK(s.unscale(s.scale(x)) == doctest::Approx(x).epsilon(1e-12));
    }
    CHECK_THROWS_AS(UnitScaler(3.0, 3.0), DegenerateRangeError);
}

TEST_CASE("param scaler: domain corners map to unit-cube corners") {
    ParametricDomain d;
    ParamScaler s(d);
    for (const auto& c : d.corners()) {
        const Eigen::Vector3d y = s.scale(c);
        for (int k = 0; k < 3; ++k) {
            const bool corner = y[k] == 0.0 || y[k] == 1.0;
            CHECK(corner);
        }
    }
    const Eigen::Vector3d mid = s.scale(d.center());
    CHECK(mid.isApprox(Eigen::Vector3d::Constant(0.5), 1e-12));
}

TEST_CASE("prior: support, density, and sampling moments") {
    Prior prior{ParametricDomain{}};
    const double logv = -std::log(prior.domain.volume());
    CHECK(prior.log_density(prior.domain.center()) == doctest::Approx(logv));
    CHECK(std::isinf(prior.log_density(DamageParams{6.0e9, 0.07, 0.01})));
    CHECK(prior.log_density(DamageParams{6.0e9, 0.07, 0.01}) < 0);

    std::mt19937_64 rng(77);
    Eigen::Vector3d acc = Eigen::Vector3d::Zero();
    const int n = 10000;
    ParamScaler scaler(prior.domain);
    for (int i = 0; i < n; ++i) acc += scaler.scale(prior.sample(rng));
    acc /= n;
    for (int k = 0; k < 3; ++k) CHECK(std::abs(acc[k] - 0.5) < 0.02);
}

TEST_CASE("log_likelihood: hand values and scaling") {
    Measurement meas;
    meas.values = Eigen::VectorXd::Zero(2);
    meas.noise_sigma = 1.0;
    meas.dt = 1.0;

    SensorTrace pred;
    pred.dt = 1.0;

    SUBCASE("exact match attains the maximum") {
        pred.values = Eigen::VectorXd::Zero(2);
        CHECK(log_likelihood(meas, pred) ==
              doctest::Approx(-std::log(2.0 * std::numbers::pi)));
    }
    SUBCASE("residuals (1,2) with sigma 1") {
        pred.values = Eigen::VectorXd(2);
        pred.values << 1.0, 2.0;
        CHECK(log_likelihood(meas, pred) ==
              doctest::Approx(-2.5 - std::log(2.0 * std::numbers::pi)));
    }
    SUBCASE("doubling the residuals quadruples the quadratic term") {
        pred.values = Eigen::VectorXd(2);
        pred.values << 1.0, 2.0;
        const double base = -std::log(2.0 * std::numbers::pi);  // zero-residual value
        const double l1 = log_likelihood(meas, pred);
        pred.values *= 2.0;
        const double l2 = log_likelihood(meas, pred);
        const double quad1 = base - l1;
        const double quad2 = base - l2;
        CHECK(quad2 == doctest::Approx(4.0 * quad1).epsilon(1e-12));
    }
    SUBCASE("invalid sigma rejected") {
        meas.noise_sigma = 0.0;
        pred.values = Eigen::VectorXd::Zero(2);
        CHECK_THROWS_AS(log_likelihood(meas, pred), InvalidNoiseError);
    }
    SUBCASE("length mismatch rejected") {
        pred.values = Eigen::VectorXd::Zero(3);
        CHECK_THROWS_AS(log_likelihood(meas, pred), InvalidInputError);
    }
}

TEST_CASE("synthesize_measurement: seeded noise, window, and variance") {
    TinyRig rig;
    const DamageParams truth{5e9, 0.1, 0.04};

    auto meas = synthesize_measurement(truth, 0.10, *rig.hifi, rig.sig, 99);
    CHECK(meas.size() == rig.steps);
    CHECK(meas.noise_sigma == doctest::Approx(0.10 * meas.u_d_max));
    CHECK(meas.window_start ==
          int(std::ceil(2.0 * rig.sig.duration() / rig.dt)));

    SUBCASE("identical seeds reproduce bit-identical noise") {
        auto again = synthesize_measurement(truth, 0.10, *rig.hifi, rig.sig, 99);
        CHECK((again.values - meas.values).cwiseAbs().maxCoeff() == 0.0);
        auto other = synthesize_measurement(truth, 0.10, *rig.hifi, rig.sig, 100);
        CHECK((other.values - meas.values).cwiseAbs().maxCoeff() > 0.0);
    }
    SUBCASE("vanishing noise level approaches the clean trace") {
        auto tiny = synthesize_measurement(truth, 1e-9, *rig.hifi, rig.sig, 99);
        const double scale = tiny.clean.cwiseAbs().maxCoeff();
        CHECK((tiny.values - tiny.clean).cwiseAbs().maxCoeff() < 1e-7 * scale);
    }
    SUBCASE("empirical noise variance tracks sigma^2") {
        // direct check of the noise path at the desk trace length
        const Eigen::VectorXd noise = meas.values - meas.clean;
        const double var = noise.squaredNorm() / noise.size();
        const double s2 = meas.noise_sigma * meas.noise_sigma;
        CHECK(std::abs(var - s2) < 0.05 * s2);
    }
    SUBCASE("longer sample comfortably within 5%") {
        std::mt19937_64 rng(4);
        std::normal_distribution<double> g(0.0, 3.0);
        Eigen::VectorXd x(20000);
        for (int i = 0; i < x.size(); ++i) x[i] = g(rng);
        CHECK(std::abs(x.squaredNorm() / x.size() - 9.0) < 0.05 * 9.0);
    }
    SUBCASE("degenerate window rejected") {
        ExcitationSignal longsig = rig.sig;
        longsig.cycle_count = 60;  // packet longer than the horizon
        HiFiForward hifi2(rig.model, longsig, rig.dt, rig.steps);
        CHECK_THROWS_AS(synthesize_measurement(truth, 0.1, hifi2, longsig, 1),
                        DegenerateSignalError);
    }
    SUBCASE("noise level bounds enforced") {
        CHECK_THROWS_AS(synthesize_measurement(truth, 0.0, *rig.hifi, rig.sig, 1),
                        InvalidInputError);
        CHECK_THROWS_AS(synthesize_measurement(truth, 0.6, *rig.hifi, rig.sig, 1),
                        InvalidInputError);
    }
}

TEST_CASE("log posterior support matches the prior box exactly") {
    TinyRig rig;
    Prior prior{rig.domain};
    const DamageParams inside{5e9, 0.1, 0.04};
    const DamageParams outside{5e9, 0.4, 0.04};
    auto meas = synthesize_measurement(inside, 0.10, *rig.hifi, rig.sig, 5);

    const double lp_in = prior.log_density(inside) + log_likelihood(meas, rig.hifi->solve(inside));
    CHECK(std::isfinite(lp_in));
    CHECK(prior.log_density(outside) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("forward model: solve counter instrumentation") {
    TinyRig rig;
    rig.hifi->reset_count();
    CHECK(rig.hifi->solve_count() == 0);
    rig.hifi->solve(DamageParams{5e9, 0.1, 0.04});
    rig.hifi->solve(DamageParams{6e9, 0.1, 0.04});
    CHECK(rig.hifi->solve_count() == 2);
}
