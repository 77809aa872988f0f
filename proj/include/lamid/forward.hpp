#pragma once

#include <atomic>
#include <memory>

#include "lamid/assembly.hpp"
#include "lamid/newmark.hpp"
#include "lamid/observe.hpp"
#include "lamid/reduced.hpp"

namespace lamid {

/// Parameter-to-trace map with an invocation counter. Thread-safe: solve()
/// is const and instances hold no mutable state beyond the atomic counter.
class ForwardModel {
public:
    virtual ~ForwardModel() = default;

    SensorTrace solve(const DamageParams& theta) const {
        count_.fetch_add(1, std::memory_order_relaxed);
        return do_solve(theta);
    }

    long long solve_count() const { return count_.load(std::memory_order_relaxed); }
    void reset_count() const { count_.store(0, std::memory_order_relaxed); }

    virtual int trace_length() const = 0;
    virtual double dt() const = 0;

private:
    virtual SensorTrace do_solve(const DamageParams& theta) const = 0;
    mutable std::atomic<long long> count_{0};
};

/// Full-order solve: assemble, Newmark march, observe.
class HiFiForward : public ForwardModel {
public:
    HiFiForward(std::shared_ptr<const WaveguideModel> model, ExcitationSignal sig, double dt,
                int steps);

    int trace_length() const override { return steps_; }
    double dt() const override { return dt_; }
    const WaveguideModel& model() const { return *model_; }
    const ExcitationSignal& signal() const { return sig_; }

private:
    SensorTrace do_solve(const DamageParams& theta) const override;
    std::shared_ptr<const WaveguideModel> model_;
    ExcitationSignal sig_;
    double dt_;
    int steps_;
};

/// Reduced-order solve: assemble the full stiffness at theta, project it onto
/// the trained basis, march the reduced system, and read the sensor row.
/// The mass projection is computed once at construction; the mass matrix does
/// not depend on the damage parameters in this model.
class RomForward : public ForwardModel {
public:
    RomForward(std::shared_ptr<const WaveguideModel> model,
               std::shared_ptr<const ReducedBasis> basis, ExcitationSignal sig, double dt,
               int steps);

    int trace_length() const override { return steps_; }
    double dt() const override { return dt_; }
    const ReducedBasis& basis() const { return *basis_; }
    const WaveguideModel& model() const { return *model_; }

private:
    SensorTrace do_solve(const DamageParams& theta) const override;
    std::shared_ptr<const WaveguideModel> model_;
    std::shared_ptr<const ReducedBasis> basis_;
    ExcitationSignal sig_;
    double dt_;
    int steps_;
    Eigen::MatrixXd mass_r_;
    Eigen::VectorXd force_map_;
    Eigen::RowVectorXd sensor_row_;
};

}  // namespace lamid
