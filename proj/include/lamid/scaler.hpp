#pragma once

#include <Eigen/Dense>

#include "lamid/errors.hpp"
#include "lamid/laminate.hpp"

namespace lamid {

/// Min-max map of one quantity onto [0,1]. Values outside [lo, hi] map
/// outside [0,1] on purpose: clamping would bias the filter update.
struct UnitScaler {
    double lo = 0.0;
    double hi = 1.0;

    UnitScaler() = default;
    UnitScaler(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(hi > lo)) throw DegenerateRangeError("scaler needs hi > lo");
    }

    double scale(double x) const { return (x - lo) / (hi - lo); }
    double unscale(double y) const { return lo + y * (hi - lo); }
    double span() const { return hi - lo; }
};

/// Componentwise scaling of damage parameters by the domain box.
struct ParamScaler {
    UnitScaler e, x, l;

    explicit ParamScaler(const ParametricDomain& d)
        : e(d.e_min, d.e_max), x(d.x_min, d.x_max), l(d.l_min, d.l_max) {}

    Eigen::Vector3d scale(const DamageParams& p) const {
        return {e.scale(p.youngs_modulus), x.scale(p.position), l.scale(p.extent)};
    }
    DamageParams unscale(const Eigen::Vector3d& y) const {
        return {e.unscale(y[0]), x.unscale(y[1]), l.unscale(y[2])};
    }
};

}  // namespace lamid
