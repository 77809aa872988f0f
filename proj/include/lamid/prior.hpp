#pragma once

#include <cmath>
#include <limits>
#include <random>

#include "lamid/laminate.hpp"

namespace lamid {

/// Box-uniform prior over the trained parametric domain.
struct Prior {
    ParametricDomain domain;

    double log_density(const DamageParams& p) const {
        if (!domain.contains(p)) return -std::numeric_limits<double>::infinity();
        return -std::log(domain.volume());
    }

    template <class Rng>
    DamageParams sample(Rng& rng) const {
        return domain.sample(rng);
    }
};

}  // namespace lamid
